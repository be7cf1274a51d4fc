// Normal forms in doubles A *_B A, generic over the factor A.
//
// An element is stored as t_1^(c_1) ... t_k^(c_k) h where consecutive copies
// c_i differ, every t_i is a non-identity left coset representative of B in
// A (recorded by its coset id), and h lies in B. With the transversal fixed
// this expression is unique, so equality of elements is equality of the
// stored data.

#ifndef FDOUBLE_AMALGAM_HPP_
#define FDOUBLE_AMALGAM_HPP_

#include <concepts>
#include <cstddef>
#include <memory>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "perm_group.hpp"
#include "subgroup_graph.hpp"
#include "word.hpp"

namespace fdouble {

  //! Result of splitting a factor element as rep(coset) * h with h in B.
  template <typename Element>
  struct Split {
    std::size_t coset;
    Element     h;
  };

  //! What the normal form engine needs from a factor A and its amalgamated
  //! subgroup B.
  template <typename F>
  concept AmalgamFactor = requires(F const&                         f,
                                   typename F::element_type const& x,
                                   std::size_t                     t) {
    { f.identity() } -> std::convertible_to<typename F::element_type>;
    { f.multiply(x, x) } -> std::convertible_to<typename F::element_type>;
    { f.invert(x) } -> std::convertible_to<typename F::element_type>;
    { f.is_identity(x) } -> std::same_as<bool>;
    { f.in_subgroup(x) } -> std::same_as<bool>;
    { f.decompose(x) } -> std::same_as<Split<typename F::element_type>>;
    { f.representative(t) } -> std::convertible_to<typename F::element_type>;
    { f.coset_count() } -> std::same_as<std::size_t>;
    { f.format(x) } -> std::convertible_to<std::string>;
  };

  //! A = F_r and B = H of finite index, with the left transversal of
  //! schreier_transversal().
  class FreeFactor {
   public:
    using element_type = Word;

    explicit FreeFactor(SubgroupGraph H)
        : _H(std::move(H)), _T(schreier_transversal(_H)) {}

    [[nodiscard]] std::size_t rank() const noexcept {
      return _H.rank();
    }
    [[nodiscard]] SubgroupGraph const& subgroup() const noexcept {
      return _H;
    }
    [[nodiscard]] Transversal const& transversal() const noexcept {
      return _T;
    }

    [[nodiscard]] Word identity() const {
      return Word(_H.rank());
    }
    [[nodiscard]] Word multiply(Word const& x, Word const& y) const {
      return x * y;
    }
    [[nodiscard]] Word invert(Word const& x) const {
      return fdouble::invert(x);
    }
    [[nodiscard]] bool is_identity(Word const& x) const {
      return x.empty();
    }
    [[nodiscard]] bool in_subgroup(Word const& x) const {
      return contains(_H, x);
    }
    [[nodiscard]] Split<Word> decompose(Word const& x) const {
      auto [t, h] = left_coset_decompose(x, _H, _T);
      return {t, std::move(h)};
    }
    [[nodiscard]] Word const& representative(std::size_t t) const {
      return _T.reps[t];
    }
    [[nodiscard]] std::size_t coset_count() const {
      return _T.size();
    }
    [[nodiscard]] std::string format(Word const& x) const {
      return x.empty() ? "1" : x.to_string();
    }

   private:
    SubgroupGraph _H;
    Transversal   _T;
  };

  //! A = Q finite (given as a permutation group) and B = P, the subgroup
  //! generated by the images of `subgroup_gens`. The representative of each
  //! left coset of P is its element of least index in Q.
  class FiniteFactor {
   public:
    using element_type = std::size_t;

    FiniteFactor(std::shared_ptr<FiniteGroupTable const> Q,
                 std::span<Word const>                    subgroup_gens)
        : _Q(std::move(Q)), _in_P(_Q->order(), false),
          _coset(_Q->order(), SpanningTree::npos) {
      std::vector<element_type> gens;
      for (auto const& w : subgroup_gens) {
        gens.push_back(_Q->evaluate(w));
      }
      std::vector<element_type> P{_Q->identity()};
      _in_P[_Q->identity()] = true;
      for (std::size_t head = 0; head < P.size(); ++head) {
        for (auto g : gens) {
          auto x = _Q->multiply(P[head], g);
          if (!_in_P[x]) {
            _in_P[x] = true;
            P.push_back(x);
          }
        }
      }
      _subgroup_order = P.size();
      for (element_type q = 0; q < _Q->order(); ++q) {
        if (_coset[q] != SpanningTree::npos) {
          continue;
        }
        for (auto p : P) {
          _coset[_Q->multiply(q, p)] = _reps.size();
        }
        _reps.push_back(q);
      }
    }

    [[nodiscard]] FiniteGroupTable const& group() const noexcept {
      return *_Q;
    }
    [[nodiscard]] std::size_t subgroup_order() const noexcept {
      return _subgroup_order;
    }

    [[nodiscard]] element_type identity() const {
      return _Q->identity();
    }
    [[nodiscard]] element_type multiply(element_type x, element_type y) const {
      return _Q->multiply(x, y);
    }
    [[nodiscard]] element_type invert(element_type x) const {
      return _Q->inverse(x);
    }
    [[nodiscard]] bool is_identity(element_type x) const {
      return x == _Q->identity();
    }
    [[nodiscard]] bool in_subgroup(element_type x) const {
      return _in_P[x];
    }
    [[nodiscard]] Split<element_type> decompose(element_type x) const {
      std::size_t t = _coset[x];
      return {t, _Q->multiply(_Q->inverse(_reps[t]), x)};
    }
    [[nodiscard]] element_type representative(std::size_t t) const {
      return _reps[t];
    }
    [[nodiscard]] std::size_t coset_count() const {
      return _reps.size();
    }
    [[nodiscard]] std::string format(element_type x) const {
      return to_cycles(_Q->element(x));
    }

   private:
    std::shared_ptr<FiniteGroupTable const> _Q;
    std::vector<bool>                       _in_P;
    std::vector<std::size_t>                _coset;
    std::vector<element_type>               _reps;
    std::size_t                             _subgroup_order = 1;
  };

  static_assert(AmalgamFactor<FreeFactor>);
  static_assert(AmalgamFactor<FiniteFactor>);

  //! Factor copy labels.
  inline constexpr int first_copy  = 1;
  inline constexpr int second_copy = 2;

  struct Syllable {
    int         copy;
    std::size_t coset;

    friend bool operator==(Syllable const&, Syllable const&) = default;
  };

  template <AmalgamFactor F>
  struct AmalgamElement {
    std::vector<Syllable>     syllables;
    typename F::element_type tail;

    friend bool operator==(AmalgamElement const&, AmalgamElement const&)
        = default;
  };

  //! A factor element tagged with the copy it lives in.
  template <typename Element>
  struct SyllableItem {
    int     copy;
    Element element;
  };

  //! \brief The double A *_B A for one factor context.
  //!
  //! All arithmetic reduces to `append`, which multiplies a normal form on
  //! the right by a single factor element: absorb the tail, merge with the
  //! last syllable if it has the same copy, and split the result again.
  //! The tail always lies in B, so no merge can cascade further left.
  template <AmalgamFactor F>
  class Amalgam {
   public:
    using element_type = typename F::element_type;
    using value_type   = AmalgamElement<F>;

    explicit Amalgam(F factor) : _factor(std::move(factor)) {}

    [[nodiscard]] F const& factor() const noexcept {
      return _factor;
    }

    [[nodiscard]] value_type identity() const {
      return {{}, _factor.identity()};
    }

    [[nodiscard]] bool is_identity(value_type const& u) const {
      return u.syllables.empty() && _factor.is_identity(u.tail);
    }

    [[nodiscard]] decltype(auto) representative(Syllable s) const {
      return _factor.representative(s.coset);
    }

    //! Right multiplication of u, in place, by x taken in copy `copy`.
    void append(value_type& u, int copy, element_type const& x) const {
      check_copy(copy);
      element_type y = _factor.multiply(u.tail, x);
      if (!u.syllables.empty() && u.syllables.back().copy == copy) {
        y = _factor.multiply(_factor.representative(u.syllables.back().coset),
                             y);
        u.syllables.pop_back();
      }
      auto [t, h] = _factor.decompose(y);
      if (t != 0) {
        u.syllables.push_back({copy, t});
      }
      u.tail = std::move(h);
    }

    [[nodiscard]] value_type
    normal_form(std::span<SyllableItem<element_type> const> items) const {
      value_type u = identity();
      for (auto const& item : items) {
        append(u, item.copy, item.element);
      }
      return u;
    }

    [[nodiscard]] value_type
    normal_form(std::vector<SyllableItem<element_type>> const& items) const {
      return normal_form(std::span<SyllableItem<element_type> const>(items));
    }

    //! A single factor element in the given copy.
    [[nodiscard]] value_type embed(int copy, element_type const& x) const {
      value_type u = identity();
      append(u, copy, x);
      return u;
    }

    //! An element of B, which lies in both copies at once.
    [[nodiscard]] value_type embed_subgroup(element_type const& h) const {
      if (!_factor.in_subgroup(h)) {
        throw Error(ErrorKind::not_in_subgroup,
                    _factor.format(h) + " is not in the amalgamated subgroup");
      }
      return {{}, h};
    }

    [[nodiscard]] value_type multiply(value_type const& u,
                                      value_type const& v) const {
      value_type r = u;
      for (auto const& s : v.syllables) {
        append(r, s.copy, _factor.representative(s.coset));
      }
      r.tail = _factor.multiply(r.tail, v.tail);
      return r;
    }

    [[nodiscard]] value_type invert(value_type const& u) const {
      value_type r{{}, _factor.invert(u.tail)};
      for (auto it = u.syllables.rbegin(); it != u.syllables.rend(); ++it) {
        append(r, it->copy, _factor.invert(_factor.representative(it->coset)));
      }
      return r;
    }

    //! x y x^-1 y^-1
    [[nodiscard]] value_type commutator(value_type const& x,
                                        value_type const& y) const {
      return multiply(multiply(x, y), multiply(invert(x), invert(y)));
    }

    //! Whitespace separated "1:rep 2:rep ... h:tail"; "identity" for 1.
    [[nodiscard]] std::string format(value_type const& u) const {
      if (is_identity(u)) {
        return "identity";
      }
      std::string out;
      for (auto const& s : u.syllables) {
        if (!out.empty()) {
          out += ' ';
        }
        out += std::to_string(s.copy) + ":"
               + _factor.format(_factor.representative(s.coset));
      }
      if (!_factor.is_identity(u.tail)) {
        if (!out.empty()) {
          out += ' ';
        }
        out += "h:" + _factor.format(u.tail);
      }
      return out;
    }

   private:
    static void check_copy(int copy) {
      if (copy != first_copy && copy != second_copy) {
        throw Error(ErrorKind::malformed_input,
                    "factor copy must be 1 or 2, got " + std::to_string(copy));
      }
    }

    F _factor;
  };

  using FreeDouble   = Amalgam<FreeFactor>;
  using FiniteDouble = Amalgam<FiniteFactor>;

  //! Copy tag used by parse_syllable_word for "h:" tokens.
  inline constexpr int subgroup_copy = 0;

  //! Parses "1:a 2:A h:aaa". A token "h:w" is returned with copy
  //! subgroup_copy; "identity" and blank input give no items.
  inline std::vector<SyllableItem<Word>> parse_syllable_word(std::string_view text,
                                                             std::size_t rank) {
    std::vector<SyllableItem<Word>> items;
    std::istringstream              is{std::string(text)};
    std::string                     token;
    while (is >> token) {
      if (token == "identity") {
        continue;
      }
      auto colon = token.find(':');
      if (colon != 1) {
        throw Error(ErrorKind::malformed_input,
                    "expected 1:word, 2:word or h:word, got \"" + token + "\"");
      }
      int copy = 0;
      switch (token[0]) {
        case '1':
          copy = first_copy;
          break;
        case '2':
          copy = second_copy;
          break;
        case 'h':
          copy = subgroup_copy;
          break;
        default:
          throw Error(ErrorKind::malformed_input,
                      "unknown copy tag in \"" + token + "\"");
      }
      items.push_back({copy, Word::parse(token.substr(2), rank)});
    }
    return items;
  }

  //! Normal form of a parsed syllable word; "h:" items must lie in H.
  inline FreeDouble::value_type
  normal_form(FreeDouble const& L, std::span<SyllableItem<Word> const> items) {
    auto u = L.identity();
    for (auto const& item : items) {
      if (item.copy == subgroup_copy) {
        u = L.multiply(u, L.embed_subgroup(item.element));
      } else {
        L.append(u, item.copy, item.element);
      }
    }
    return u;
  }

  inline FreeDouble::value_type parse_amalgam(FreeDouble const& L,
                                              std::string_view  text) {
    auto items = parse_syllable_word(text, L.factor().rank());
    return normal_form(L, std::span<SyllableItem<Word> const>(items));
  }

  //! phi_1: L -> G, identifying the two copies.
  inline Word phi1(FreeDouble::value_type const& u, FreeDouble const& L) {
    Word w(L.factor().rank());
    for (auto const& s : u.syllables) {
      w = w * L.factor().representative(s.coset);
    }
    return w * u.tail;
  }

  //! \brief phi_2: L = G *_H G -> L/N = G/N *_{H/N} G/N for N normal in G
  //! and contained in H.
  class DoubleQuotient {
   public:
    DoubleQuotient(FreeDouble const&  L,
                   SubgroupGraph      N,
                   std::size_t        cap = default_group_cap)
        : _N(std::move(N)),
          _target(make_target(L.factor().subgroup(), _N, cap)) {}

    [[nodiscard]] SubgroupGraph const& kernel() const noexcept {
      return _N;
    }
    [[nodiscard]] FiniteDouble const& target() const noexcept {
      return _target;
    }
    [[nodiscard]] FiniteGroupTable const& quotient_group() const noexcept {
      return _target.factor().group();
    }

    [[nodiscard]] FiniteDouble::value_type
    operator()(FreeDouble const& L, FreeDouble::value_type const& u) const {
      auto const& Q = quotient_group();
      auto        v = _target.identity();
      for (auto const& s : u.syllables) {
        _target.append(v, s.copy, Q.evaluate(L.factor().representative(s.coset)));
      }
      v.tail = _target.factor().multiply(v.tail, Q.evaluate(u.tail));
      return v;
    }

   private:
    static FiniteDouble make_target(SubgroupGraph const& H,
                                    SubgroupGraph const& N,
                                    std::size_t          cap) {
      if (N.rank() != H.rank()) {
        throw Error(ErrorKind::rank_mismatch,
                    "N and H live in free groups of different rank");
      }
      if (!is_normal(N)) {
        throw Error(ErrorKind::not_normal, "N is not normal in G");
      }
      auto N_basis = basis(N);
      for (auto const& w : N_basis) {
        if (!contains(H, w)) {
          throw Error(ErrorKind::not_contained,
                      "basis element " + w.to_string() + " of N is not in H");
        }
      }
      if (!N.is_complete()) {
        // Normal and of infinite index means trivial, and G/1 is not finite.
        throw Error(ErrorKind::infinite_index,
                    "N must have finite index to give a finite quotient");
      }
      auto Q = std::make_shared<FiniteGroupTable const>(
          image_group(coset_action(N), cap));
      auto H_basis = basis(H);
      return FiniteDouble(FiniteFactor(std::move(Q), H_basis));
    }

    SubgroupGraph _N;
    FiniteDouble  _target;
  };

  inline FiniteDouble::value_type phi2(FreeDouble::value_type const& u,
                                       FreeDouble const&             L,
                                       DoubleQuotient const&         quotient) {
    return quotient(L, u);
  }

}  // namespace fdouble

#endif  // FDOUBLE_AMALGAM_HPP_
