// Finite permutation quotients of F_r: coset actions, exhaustive closure of
// permutation groups, and normal cores of finite-index subgroups.

#ifndef FDOUBLE_PERM_GROUP_HPP_
#define FDOUBLE_PERM_GROUP_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "error.hpp"
#include "subgroup_graph.hpp"
#include "word.hpp"

namespace fdouble {

  //! A permutation of {0, ..., n-1} acting on the right: point x goes to p[x].
  using Perm = std::vector<std::uint32_t>;

  inline Perm identity_perm(std::size_t degree) {
    Perm p(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      p[i] = static_cast<std::uint32_t>(i);
    }
    return p;
  }

  //! Product for the right action: x^(p q) = (x^p)^q.
  inline Perm compose(Perm const& p, Perm const& q) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      r[i] = q[p[i]];
    }
    return r;
  }

  inline Perm inverse_perm(Perm const& p) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      r[p[i]] = static_cast<std::uint32_t>(i);
    }
    return r;
  }

  inline bool is_bijection(Perm const& p) {
    std::vector<bool> hit(p.size(), false);
    for (auto x : p) {
      if (x >= p.size() || hit[x]) {
        return false;
      }
      hit[x] = true;
    }
    return true;
  }

  //! Parses cycle notation such as "(0 1 2)(3 4)" or "()" on `degree` points.
  //! With degree 0 the degree is taken to be one more than the largest point.
  inline Perm parse_cycles(std::string_view text, std::size_t degree = 0) {
    std::vector<std::vector<std::uint32_t>> cycles;
    std::size_t                             largest = 0;
    bool                                    open    = false;
    std::string                             number;
    auto flush = [&] {
      if (!number.empty()) {
        auto x = static_cast<std::uint32_t>(std::stoul(number));
        cycles.back().push_back(x);
        largest = std::max<std::size_t>(largest, x + 1);
        number.clear();
      }
    };
    for (char c : text) {
      if (c == '(') {
        if (open) {
          throw Error(ErrorKind::malformed_input,
                      "nested '(' in \"" + std::string(text) + "\"");
        }
        open = true;
        cycles.emplace_back();
      } else if (c == ')') {
        if (!open) {
          throw Error(ErrorKind::malformed_input,
                      "unbalanced ')' in \"" + std::string(text) + "\"");
        }
        flush();
        open = false;
      } else if (c >= '0' && c <= '9' && open) {
        number.push_back(c);
      } else if ((c == ' ' || c == ',') && open) {
        flush();
      } else if (c != ' ') {
        throw Error(ErrorKind::malformed_input,
                    "unexpected character in permutation \"" + std::string(text)
                        + "\"");
      }
    }
    if (open) {
      throw Error(ErrorKind::malformed_input,
                  "unterminated cycle in \"" + std::string(text) + "\"");
    }
    if (degree == 0) {
      degree = std::max<std::size_t>(largest, 1);
    }
    if (largest > degree) {
      throw Error(ErrorKind::malformed_input,
                  "point out of range in \"" + std::string(text) + "\"");
    }
    Perm p = identity_perm(degree);
    for (auto const& cycle : cycles) {
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        p[cycle[i]] = cycle[(i + 1) % cycle.size()];
      }
    }
    if (!is_bijection(p)) {
      throw Error(ErrorKind::malformed_input,
                  "cycles of \"" + std::string(text) + "\" are not disjoint");
    }
    return p;
  }

  inline std::string to_cycles(Perm const& p) {
    std::string       out;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (seen[i] || p[i] == i) {
        continue;
      }
      out += '(';
      for (std::size_t j = i; !seen[j]; j = p[j]) {
        seen[j] = true;
        if (j != i) {
          out += ' ';
        }
        out += std::to_string(j);
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  //! One permutation of {0..degree-1} per generator of F_r.
  struct PermRep {
    std::size_t       degree = 1;
    std::vector<Perm> gens;

    [[nodiscard]] std::size_t rank() const noexcept {
      return gens.size();
    }

    //! Image of a point under a word, reading left to right.
    [[nodiscard]] std::uint32_t act(std::uint32_t point, Word const& w) const {
      for (Letter x : w.letters()) {
        auto const& g = gens[generator_of(x)];
        if (is_inverse_letter(x)) {
          point = static_cast<std::uint32_t>(
              std::find(g.begin(), g.end(), point) - g.begin());
        } else {
          point = g[point];
        }
      }
      return point;
    }

    [[nodiscard]] bool is_transitive() const {
      std::vector<bool>          seen(degree, false);
      std::vector<std::uint32_t> stack{0};
      seen[0]           = true;
      std::size_t count = 1;
      while (!stack.empty()) {
        auto x = stack.back();
        stack.pop_back();
        for (auto const& g : gens) {
          for (auto y : {g[x], static_cast<std::uint32_t>(
                                   std::find(g.begin(), g.end(), x) - g.begin())}) {
            if (!seen[y]) {
              seen[y] = true;
              ++count;
              stack.push_back(y);
            }
          }
        }
      }
      return count == degree;
    }

    friend bool operator==(PermRep const&, PermRep const&) = default;
  };

  //! Right action of F_r on the right cosets of H, i.e. on the vertices of
  //! its Stallings graph. The stabilizer of point 0 is H.
  inline PermRep coset_action(SubgroupGraph const& H) {
    if (!H.is_complete()) {
      throw Error(ErrorKind::infinite_index,
                  "coset action needs a finite-index subgroup");
    }
    PermRep rep{H.vertex_count(), {}};
    for (std::size_t g = 0; g < H.rank(); ++g) {
      Perm p(H.vertex_count());
      for (Vertex v = 0; v < H.vertex_count(); ++v) {
        p[v] = H.out(v, g);
      }
      rep.gens.push_back(std::move(p));
    }
    return rep;
  }

  //! The Stallings graph of the stabilizer of point 0 under `rep`.
  inline SubgroupGraph stabilizer_graph(PermRep const& rep) {
    std::vector<Edge> edges;
    for (std::size_t g = 0; g < rep.gens.size(); ++g) {
      if (rep.gens[g].size() != rep.degree || !is_bijection(rep.gens[g])) {
        throw Error(ErrorKind::malformed_input,
                    "generator image " + std::to_string(g)
                        + " is not a permutation of degree "
                        + std::to_string(rep.degree));
      }
      for (std::uint32_t v = 0; v < rep.degree; ++v) {
        edges.push_back({v, g, rep.gens[g][v]});
      }
    }
    return SubgroupGraph::from_edges(rep.gens.size(), rep.degree,
                                     std::move(edges));
  }

  namespace detail {
    struct PermHash {
      std::size_t operator()(Perm const& p) const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (auto x : p) {
          h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
      }
    };
  }  // namespace detail

  inline constexpr std::size_t default_group_cap = 1'000'000;

  //! \brief The finite group generated by the images of the free generators,
  //! with every element stored explicitly.
  //!
  //! Element 0 is the identity; elements are listed in breadth-first order
  //! of the Cayley graph with respect to the generator images.
  class FiniteGroupTable {
   public:
    using element_type = std::size_t;

    FiniteGroupTable(PermRep const& rep, std::size_t cap = default_group_cap)
        : _degree(rep.degree), _rank(rep.gens.size()) {
      for (auto const& g : rep.gens) {
        if (g.size() != _degree || !is_bijection(g)) {
          throw Error(ErrorKind::malformed_input,
                      "generator image is not a permutation of degree "
                          + std::to_string(_degree));
        }
      }
      add(identity_perm(_degree), cap);
      for (std::size_t head = 0; head < _elements.size(); ++head) {
        for (std::size_t g = 0; g < _rank; ++g) {
          Perm next = compose(_elements[head], rep.gens[g]);
          auto it   = _index.find(next);
          _right.push_back(it == _index.end() ? add(std::move(next), cap)
                                              : it->second);
        }
      }
      _inverse.resize(_elements.size());
      for (std::size_t e = 0; e < _elements.size(); ++e) {
        _inverse[e] = _index.at(inverse_perm(_elements[e]));
      }
      _right_inverse.resize(_right.size());
      for (std::size_t e = 0; e < _elements.size(); ++e) {
        for (std::size_t g = 0; g < _rank; ++g) {
          _right_inverse[_right[e * _rank + g] * _rank + g] = e;
        }
      }
    }

    [[nodiscard]] std::size_t order() const noexcept {
      return _elements.size();
    }
    [[nodiscard]] std::size_t rank() const noexcept {
      return _rank;
    }
    [[nodiscard]] std::size_t degree() const noexcept {
      return _degree;
    }
    [[nodiscard]] static constexpr element_type identity() noexcept {
      return 0;
    }
    [[nodiscard]] Perm const& element(element_type e) const {
      return _elements[e];
    }
    [[nodiscard]] std::optional<element_type> index_of(Perm const& p) const {
      auto it = _index.find(p);
      if (it == _index.end()) {
        return std::nullopt;
      }
      return it->second;
    }
    [[nodiscard]] element_type multiply(element_type x, element_type y) const {
      return _index.at(compose(_elements[x], _elements[y]));
    }
    [[nodiscard]] element_type inverse(element_type x) const {
      return _inverse[x];
    }
    [[nodiscard]] element_type generator_image(std::size_t g) const {
      return _right[g];
    }
    //! x times the image of the letter.
    [[nodiscard]] element_type times(element_type x, Letter letter) const {
      auto const& table = is_inverse_letter(letter) ? _right_inverse : _right;
      return table[x * _rank + generator_of(letter)];
    }
    //! Image of a word of F_r.
    [[nodiscard]] element_type evaluate(Word const& w) const {
      if (w.rank() != _rank) {
        throw Error(ErrorKind::rank_mismatch,
                    "evaluating a word of rank " + std::to_string(w.rank())
                        + " in a quotient of F_" + std::to_string(_rank));
      }
      element_type x = identity();
      for (Letter letter : w.letters()) {
        x = times(x, letter);
      }
      return x;
    }

   private:
    element_type add(Perm p, std::size_t cap) {
      if (_elements.size() >= cap) {
        throw Error(ErrorKind::resource_limit,
                    "permutation group closure exceeded "
                        + std::to_string(cap) + " elements");
      }
      _index.emplace(p, _elements.size());
      _elements.push_back(std::move(p));
      return _elements.size() - 1;
    }

    std::size_t                                           _degree;
    std::size_t                                           _rank;
    std::vector<Perm>                                     _elements;
    std::unordered_map<Perm, element_type, detail::PermHash> _index;
    std::vector<element_type>                             _inverse;
    std::vector<element_type>                             _right;
    std::vector<element_type>                             _right_inverse;
  };

  inline FiniteGroupTable image_group(PermRep const& rep,
                                      std::size_t    cap = default_group_cap) {
    return FiniteGroupTable(rep, cap);
  }

  //! The Stallings graph of the kernel of F_r -> Q: the Cayley graph of Q
  //! with respect to the generator images.
  inline SubgroupGraph kernel_graph(FiniteGroupTable const& Q) {
    std::vector<Edge> edges;
    edges.reserve(Q.order() * Q.rank());
    for (std::size_t e = 0; e < Q.order(); ++e) {
      for (std::size_t g = 0; g < Q.rank(); ++g) {
        edges.push_back({static_cast<Vertex>(e), g,
                         static_cast<Vertex>(Q.times(e, make_letter(g)))});
      }
    }
    return SubgroupGraph::from_edges(Q.rank(), Q.order(), std::move(edges));
  }

  //! Largest subgroup of H normal in F_r: the kernel of the action of F_r on
  //! the cosets of H.
  inline SubgroupGraph normal_core(SubgroupGraph const& H,
                                   std::size_t cap = default_group_cap) {
    return kernel_graph(image_group(coset_action(H), cap));
  }

}  // namespace fdouble

#endif  // FDOUBLE_PERM_GROUP_HPP_
