// The free kernel of the folding map L = G *_H G -> G, and an explicit
// F_2 x F_2 inside L built from a normal subgroup N of G contained in H.

#ifndef FDOUBLE_EMBEDDING_HPP_
#define FDOUBLE_EMBEDDING_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <thread>
#include <vector>

#include "amalgam.hpp"
#include "error.hpp"
#include "perm_group.hpp"
#include "subgroup_graph.hpp"
#include "word.hpp"

namespace fdouble {

  //! \brief G = F_r, a finite-index H < G, and a normal N < G inside H,
  //! together with the double L = G *_H G and the quotient map L -> L/N.
  //!
  //! When N is not supplied it is the normal core of H.
  class DoubleContext {
   public:
    DoubleContext(SubgroupGraph                H,
                  std::optional<SubgroupGraph> N   = std::nullopt,
                  std::size_t                  cap = default_group_cap)
        : _L(FreeFactor(std::move(H))),
          _quotient(_L, N ? std::move(*N) : normal_core(_L.factor().subgroup(), cap),
                    cap) {}

    [[nodiscard]] std::size_t rank() const noexcept {
      return _L.factor().rank();
    }
    [[nodiscard]] SubgroupGraph const& H() const noexcept {
      return _L.factor().subgroup();
    }
    [[nodiscard]] SubgroupGraph const& N() const noexcept {
      return _quotient.kernel();
    }
    [[nodiscard]] Transversal const& transversal() const noexcept {
      return _L.factor().transversal();
    }
    [[nodiscard]] FreeDouble const& L() const noexcept {
      return _L;
    }
    [[nodiscard]] DoubleQuotient const& quotient() const noexcept {
      return _quotient;
    }
    //! [G : H]
    [[nodiscard]] std::size_t index_H() const noexcept {
      return H().vertex_count();
    }
    //! [G : N] = |G/N|
    [[nodiscard]] std::size_t index_N() const noexcept {
      return N().vertex_count();
    }

    [[nodiscard]] Word phi1(FreeDouble::value_type const& u) const {
      return fdouble::phi1(u, _L);
    }
    [[nodiscard]] FiniteDouble::value_type
    phi2(FreeDouble::value_type const& u) const {
      return _quotient(_L, u);
    }

   private:
    FreeDouble     _L;
    DoubleQuotient _quotient;
  };

  //! Free basis of ker(phi_1): t^(1) (t^(2))^-1 for every non-identity left
  //! coset representative t of H, in transversal order. There are [G:H] - 1
  //! of them.
  inline std::vector<FreeDouble::value_type> kernel_basis(FreeDouble const& L) {
    auto const&                         T = L.factor().transversal();
    std::vector<FreeDouble::value_type> out;
    for (std::size_t t = 1; t < T.size(); ++t) {
      std::vector<SyllableItem<Word>> items{{first_copy, T.reps[t]},
                                            {second_copy, invert(T.reps[t])}};
      out.push_back(L.normal_form(items));
    }
    return out;
  }

  inline std::vector<FreeDouble::value_type>
  kernel_basis(DoubleContext const& ctx) {
    return kernel_basis(ctx.L());
  }

  //! Image of an abstract word under letter i |-> gens[i].
  inline FreeDouble::value_type
  evaluate(FreeDouble const&                          L,
           std::vector<FreeDouble::value_type> const& gens,
           std::vector<FreeDouble::value_type> const& inverses,
           Word const&                                w) {
    auto u = L.identity();
    for (Letter x : w.letters()) {
      auto const& g = is_inverse_letter(x) ? inverses[generator_of(x)]
                                           : gens[generator_of(x)];
      u = L.multiply(u, g);
    }
    return u;
  }

  inline FreeDouble::value_type
  evaluate(FreeDouble const&                          L,
           std::vector<FreeDouble::value_type> const& gens,
           Word const&                                w) {
    std::vector<FreeDouble::value_type> inverses;
    for (auto const& g : gens) {
      inverses.push_back(L.invert(g));
    }
    return evaluate(L, gens, inverses, w);
  }

  struct RelationSearch {
    std::size_t         words_checked = 0;
    std::optional<Word> relation;
  };

  //! Depth-first search through every non-empty freely reduced word of
  //! length <= max_len in the elements `gens`, stopping at the first one
  //! that is the identity of L.
  inline RelationSearch
  search_relation(FreeDouble const&                          L,
                  std::vector<FreeDouble::value_type> const& gens,
                  std::size_t                                max_len) {
    std::size_t const rank = gens.size();
    std::vector<FreeDouble::value_type> letter_value;
    for (std::size_t i = 0; i < rank; ++i) {
      letter_value.push_back(gens[i]);
      letter_value.push_back(L.invert(gens[i]));
    }
    RelationSearch result;
    if (rank == 0) {
      return result;
    }

    struct Frame {
      FreeDouble::value_type value;
      Letter                 next;
    };
    std::vector<Letter> word;
    std::vector<Frame>  stack;
    stack.push_back({L.identity(), 0});
    while (!stack.empty()) {
      auto& top = stack.back();
      if (top.next == 2 * rank || stack.size() > max_len) {
        stack.pop_back();
        if (!word.empty()) {
          word.pop_back();
        }
        continue;
      }
      Letter x = top.next++;
      if (!word.empty() && x == inverse_letter(word.back())) {
        continue;
      }
      auto value = L.multiply(top.value, letter_value[x]);
      word.push_back(x);
      ++result.words_checked;
      if (L.is_identity(value)) {
        result.relation = Word(rank, word);
        return result;
      }
      stack.push_back({std::move(value), 0});
    }
    return result;
  }

  //! \brief Four elements of L generating F_2 x F_2.
  //!
  //! x1, x2 are the first two basis elements of N placed in L (they commute
  //! with everything in ker phi_1 because N meets ker phi_1 trivially and
  //! both are normal); y1, y2 are the first two kernel basis elements.
  struct Witness {
    std::shared_ptr<DoubleContext const> context;
    Word                                 n1, n2;
    FreeDouble::value_type               x1, x2, y1, y2;
  };

  inline Witness build_witness(std::size_t                  rank,
                               SubgroupGraph const&         H,
                               std::optional<SubgroupGraph> N   = std::nullopt,
                               std::size_t                  cap = default_group_cap) {
    if (rank < 2) {
      throw Error(ErrorKind::rank_too_small,
                  "F_" + std::to_string(rank)
                      + " has no non-abelian free subgroup; need rank >= 2");
    }
    if (H.rank() != rank) {
      throw Error(ErrorKind::rank_mismatch,
                  "H is a subgroup of F_" + std::to_string(H.rank()));
    }
    if (!H.is_complete()) {
      throw Error(ErrorKind::infinite_index, "H must have finite index");
    }
    if (H.vertex_count() < 3) {
      throw Error(ErrorKind::index_too_small,
                  "[G:H] = " + std::to_string(H.vertex_count())
                      + " but the construction needs [G:H] >= 3");
    }
    if (N) {
      if (N->rank() != rank) {
        throw Error(ErrorKind::rank_mismatch,
                    "N is a subgroup of F_" + std::to_string(N->rank()));
      }
      if (!is_normal(*N)) {
        throw Error(ErrorKind::not_normal, "N is not normal in G");
      }
      for (auto const& b : basis(*N)) {
        if (!contains(H, b)) {
          throw Error(ErrorKind::not_contained,
                      "basis element " + b.to_string() + " of N is not in H");
        }
      }
      if (subgroup_rank(*N) < 2) {
        throw Error(ErrorKind::rank_too_small,
                    "N has rank " + std::to_string(subgroup_rank(*N))
                        + " and contains no non-abelian free subgroup");
      }
    }
    auto ctx = std::make_shared<DoubleContext const>(H, std::move(N), cap);
    auto N_basis = basis(ctx->N());
    if (N_basis.size() < 2) {
      throw Error(ErrorKind::rank_too_small,
                  "N has rank " + std::to_string(N_basis.size())
                      + " and contains no non-abelian free subgroup");
    }
    auto K = kernel_basis(*ctx);
    auto const& L = ctx->L();
    return Witness{ctx,
                   N_basis[0],
                   N_basis[1],
                   L.embed_subgroup(N_basis[0]),
                   L.embed_subgroup(N_basis[1]),
                   K[0],
                   K[1]};
  }

  struct VerificationReport {
    std::size_t   commutators_checked = 0;
    bool          commutators_pass    = false;
    bool          kernel_conditions   = false;
    std::size_t   injectivity_samples = 0;
    std::size_t   injectivity_failures = 0;
    std::size_t   max_len             = 0;
    std::uint64_t seed                = 0;

    [[nodiscard]] bool passed() const noexcept {
      return commutators_pass && kernel_conditions
             && injectivity_failures == 0;
    }

    friend bool operator==(VerificationReport const&,
                           VerificationReport const&) = default;
  };

  namespace detail {
    // splitmix64 finalizer; gives each sample its own independent stream.
    constexpr std::uint64_t mix(std::uint64_t x) noexcept {
      x += 0x9e3779b97f4a7c15ULL;
      x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
      x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
      return x ^ (x >> 31);
    }
  }  // namespace detail

  //! The pair (u, v) of abstract words drawn for sample `i`: both non-empty,
  //! reduced, in two letters, of length at most max_len.
  inline std::pair<Word, Word> injectivity_sample(std::uint64_t seed,
                                                  std::size_t   i,
                                                  std::size_t   max_len) {
    std::mt19937_64 rng(detail::mix(seed ^ detail::mix(i)));
    std::uniform_int_distribution<std::size_t> length(1, max_len);
    Word u = random_word(rng, 2, length(rng));
    Word v = random_word(rng, 2, length(rng));
    return {std::move(u), std::move(v)};
  }

  //! Checks, exactly, that [x_i, y_j] = 1, phi_1(y_i) = 1, phi_2(x_i) = 1
  //! and none of the four is trivial; then samples u(x1, x2) v(y1, y2) != 1.
  //! Sample i depends only on (seed, i), so the report does not depend on
  //! `workers`.
  inline VerificationReport verify_witness(Witness const& w,
                                           std::size_t    samples,
                                           std::size_t    max_len,
                                           std::uint64_t  seed,
                                           unsigned       workers = 1) {
    auto const&        ctx = *w.context;
    auto const&        L   = ctx.L();
    VerificationReport report;
    report.seed    = seed;
    report.max_len = max_len;

    std::vector<FreeDouble::value_type> xs{w.x1, w.x2}, ys{w.y1, w.y2};
    report.commutators_pass = true;
    for (auto const& x : xs) {
      for (auto const& y : ys) {
        ++report.commutators_checked;
        report.commutators_pass &= L.is_identity(L.commutator(x, y));
      }
    }

    auto const& L_over_N = ctx.quotient().target();
    report.kernel_conditions = true;
    for (auto const& y : ys) {
      report.kernel_conditions &= ctx.phi1(y).empty() && !L.is_identity(y);
    }
    for (auto const& x : xs) {
      report.kernel_conditions
          &= L_over_N.is_identity(ctx.phi2(x)) && !L.is_identity(x);
    }

    std::vector<FreeDouble::value_type> xs_inv{L.invert(w.x1), L.invert(w.x2)};
    std::vector<FreeDouble::value_type> ys_inv{L.invert(w.y1), L.invert(w.y2)};
    workers = std::max(1U, std::min<unsigned>(workers, samples == 0 ? 1 : samples));
    std::vector<std::size_t> failures(workers, 0);
    auto run = [&](unsigned k) {
      for (std::size_t i = k; i < samples; i += workers) {
        auto [u, v] = injectivity_sample(seed, i, max_len);
        auto value  = L.multiply(evaluate(L, xs, xs_inv, u),
                                evaluate(L, ys, ys_inv, v));
        if (L.is_identity(value)) {
          ++failures[k];
        }
      }
    };
    if (workers == 1) {
      run(0);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned k = 0; k < workers; ++k) {
        pool.emplace_back(run, k);
      }
    }
    report.injectivity_samples = samples;
    for (auto f : failures) {
      report.injectivity_failures += f;
    }
    return report;
  }

  //! L is virtually F_{r1} x F_{r2} with K1 = N and K2 = ker of the folding
  //! map of L/N.
  struct VirtualProductReport {
    std::size_t r1 = 0;
    std::size_t r2 = 0;
    std::size_t index = 0;
    //! Both factors non-abelian, i.e. [G:H] >= 3 and rank(N) >= 2.
    bool applicable = false;

    friend bool operator==(VirtualProductReport const&,
                           VirtualProductReport const&) = default;
  };

  inline VirtualProductReport virtual_product_report(DoubleContext const& ctx) {
    VirtualProductReport report;
    report.r1         = subgroup_rank(ctx.N());
    report.r2         = ctx.index_H() - 1;
    report.index      = ctx.quotient().quotient_group().order();
    report.applicable = report.r1 >= 2 && report.r2 >= 2;
    return report;
  }

}  // namespace fdouble

#endif  // FDOUBLE_EMBEDDING_HPP_
