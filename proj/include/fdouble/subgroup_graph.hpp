// Stallings graphs of finitely generated subgroups of F_r: folding,
// membership, index, rank, free bases, and left Schreier transversals.

#ifndef FDOUBLE_SUBGROUP_GRAPH_HPP_
#define FDOUBLE_SUBGROUP_GRAPH_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "error.hpp"
#include "word.hpp"

namespace fdouble {

  using Vertex = std::uint32_t;

  inline constexpr Vertex undefined_vertex = std::numeric_limits<Vertex>::max();

  //! One labelled edge `from --gen--> to`.
  struct Edge {
    Vertex      from;
    std::size_t gen;
    Vertex      to;

    friend bool operator==(Edge const&, Edge const&) = default;
    friend auto operator<=>(Edge const&, Edge const&) = default;
  };

  namespace detail {

    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : _parent(n) {
        std::iota(_parent.begin(), _parent.end(), Vertex(0));
      }

      Vertex find(Vertex x) {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }

      // Keeps the smaller id as the root, so the base vertex 0 survives.
      bool unite(Vertex x, Vertex y) {
        x = find(x);
        y = find(y);
        if (x == y) {
          return false;
        }
        if (y < x) {
          std::swap(x, y);
        }
        _parent[y] = x;
        return true;
      }

     private:
      std::vector<Vertex> _parent;
    };

  }  // namespace detail

  //! \brief A folded core graph whose closed paths at the base vertex spell
  //! exactly the elements of a subgroup of F_r.
  //!
  //! Vertices are numbered breadth-first from the base (vertex 0), exploring
  //! generators in increasing order and, for each generator, the outgoing
  //! edge before the incoming one. Because of this numbering two graphs
  //! represent the same subgroup if and only if they compare equal.
  class SubgroupGraph {
   public:
    SubgroupGraph() : SubgroupGraph(0) {}

    //! The trivial subgroup of F_rank.
    explicit SubgroupGraph(std::size_t rank)
        : _rank(rank), _vertices(1), _out(rank, undefined_vertex),
          _in(rank, undefined_vertex) {}

    //! Stallings folding of the flower graph of `gens`.
    static SubgroupGraph from_generators(std::span<Word const> gens,
                                         std::size_t           rank) {
      std::vector<Edge> edges;
      Vertex            next = 1;
      for (auto const& w : gens) {
        if (w.rank() != rank) {
          throw Error(ErrorKind::rank_mismatch,
                      "generator " + w.to_string() + " has rank "
                          + std::to_string(w.rank()) + ", expected "
                          + std::to_string(rank));
        }
        if (w.empty()) {
          continue;
        }
        Vertex from = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
          Vertex to = (i + 1 == w.size()) ? 0 : next++;
          Letter x  = w[i];
          if (is_inverse_letter(x)) {
            edges.push_back({to, generator_of(x), from});
          } else {
            edges.push_back({from, generator_of(x), to});
          }
          from = to;
        }
      }
      return from_edges(rank, next, std::move(edges));
    }

    static SubgroupGraph from_generators(std::vector<Word> const& gens,
                                         std::size_t              rank) {
      return from_generators(std::span<Word const>(gens), rank);
    }

    //! Folds an arbitrary labelled graph on `vertex_count` vertices with
    //! base 0, trims it to its core and numbers it canonically.
    static SubgroupGraph from_edges(std::size_t       rank,
                                    std::size_t       vertex_count,
                                    std::vector<Edge> edges) {
      detail::UnionFind uf(vertex_count);
      bool              merged = true;
      while (merged) {
        merged = false;
        for (auto& e : edges) {
          e.from = uf.find(e.from);
          e.to   = uf.find(e.to);
        }
        // Two edges with the same source and label force their targets
        // together, and dually for the same target and label.
        std::sort(edges.begin(), edges.end());
        for (std::size_t i = 1; i < edges.size(); ++i) {
          auto const& a = edges[i - 1];
          auto const& b = edges[i];
          if (a.from == b.from && a.gen == b.gen && a.to != b.to) {
            merged |= uf.unite(a.to, b.to);
          }
        }
        std::sort(edges.begin(), edges.end(), [](Edge const& a, Edge const& b) {
          return std::tie(a.to, a.gen, a.from) < std::tie(b.to, b.gen, b.from);
        });
        for (std::size_t i = 1; i < edges.size(); ++i) {
          auto const& a = edges[i - 1];
          auto const& b = edges[i];
          if (a.to == b.to && a.gen == b.gen && a.from != b.from) {
            merged |= uf.unite(a.from, b.from);
          }
        }
      }
      for (auto& e : edges) {
        e.from = uf.find(e.from);
        e.to   = uf.find(e.to);
      }
      std::sort(edges.begin(), edges.end());
      edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
      trim_hairs(vertex_count, edges);
      return canonical(rank, vertex_count, edges);
    }

    [[nodiscard]] std::size_t rank() const noexcept {
      return _rank;
    }
    [[nodiscard]] std::size_t vertex_count() const noexcept {
      return _vertices;
    }
    [[nodiscard]] std::size_t edge_count() const noexcept {
      return static_cast<std::size_t>(
          std::count_if(_out.begin(), _out.end(), [](Vertex v) {
            return v != undefined_vertex;
          }));
    }

    //! Target of `gen` read forwards from v, or undefined_vertex.
    [[nodiscard]] Vertex out(Vertex v, std::size_t gen) const {
      return _out[v * _rank + gen];
    }
    //! Source of the `gen` edge entering v, or undefined_vertex.
    [[nodiscard]] Vertex in(Vertex v, std::size_t gen) const {
      return _in[v * _rank + gen];
    }
    [[nodiscard]] Vertex follow(Vertex v, Letter x) const {
      return is_inverse_letter(x) ? in(v, generator_of(x))
                                  : out(v, generator_of(x));
    }

    //! The vertex reached by reading w from `start`, if the path exists.
    [[nodiscard]] std::optional<Vertex> read(Word const& w,
                                             Vertex      start = 0) const {
      check_rank(w);
      Vertex v = start;
      for (Letter x : w.letters()) {
        v = follow(v, x);
        if (v == undefined_vertex) {
          return std::nullopt;
        }
      }
      return v;
    }

    //! Every vertex has all 2r directions defined.
    [[nodiscard]] bool is_complete() const noexcept {
      return std::none_of(_out.begin(), _out.end(), [](Vertex v) {
        return v == undefined_vertex;
      });
    }

    [[nodiscard]] std::vector<Edge> edges() const {
      std::vector<Edge> out;
      for (Vertex v = 0; v < _vertices; ++v) {
        for (std::size_t g = 0; g < _rank; ++g) {
          if (this->out(v, g) != undefined_vertex) {
            out.push_back({v, g, this->out(v, g)});
          }
        }
      }
      return out;
    }

    void check_rank(Word const& w) const {
      if (w.rank() != _rank) {
        throw Error(ErrorKind::rank_mismatch,
                    "word of rank " + std::to_string(w.rank())
                        + " read in a subgroup graph of rank "
                        + std::to_string(_rank));
      }
    }

    friend bool operator==(SubgroupGraph const&, SubgroupGraph const&)
        = default;

   private:
    // Repeatedly removes non-base vertices of degree one (a loop counts
    // twice). Vertices left without edges are dropped by canonical().
    static void trim_hairs(std::size_t vertex_count, std::vector<Edge>& edges) {
      std::vector<std::size_t> degree(vertex_count, 0);
      for (auto const& e : edges) {
        ++degree[e.from];
        ++degree[e.to];
      }
      std::vector<bool>   removed(edges.size(), false);
      std::vector<Vertex> stack;
      for (Vertex v = 1; v < vertex_count; ++v) {
        if (degree[v] == 1) {
          stack.push_back(v);
        }
      }
      std::vector<std::vector<std::size_t>> incident(vertex_count);
      for (std::size_t i = 0; i < edges.size(); ++i) {
        incident[edges[i].from].push_back(i);
        if (edges[i].to != edges[i].from) {
          incident[edges[i].to].push_back(i);
        }
      }
      while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        if (degree[v] != 1) {
          continue;
        }
        for (std::size_t i : incident[v]) {
          if (removed[i]) {
            continue;
          }
          removed[i]   = true;
          Vertex other = edges[i].from == v ? edges[i].to : edges[i].from;
          --degree[v];
          --degree[other];
          if (other != 0 && degree[other] == 1) {
            stack.push_back(other);
          }
          break;
        }
      }
      std::size_t k = 0;
      for (std::size_t i = 0; i < edges.size(); ++i) {
        if (!removed[i]) {
          edges[k++] = edges[i];
        }
      }
      edges.resize(k);
    }

    // Renumbers the component of vertex 0 breadth-first. `edges` must
    // already be folded.
    static SubgroupGraph canonical(std::size_t              rank,
                                   std::size_t              vertex_count,
                                   std::vector<Edge> const& edges) {
      std::vector<Vertex> out(vertex_count * rank, undefined_vertex);
      std::vector<Vertex> in(vertex_count * rank, undefined_vertex);
      for (auto const& e : edges) {
        out[e.from * rank + e.gen] = e.to;
        in[e.to * rank + e.gen]    = e.from;
      }
      std::vector<Vertex> relabel(vertex_count, undefined_vertex);
      std::vector<Vertex> order{0};
      relabel[0] = 0;
      for (std::size_t head = 0; head < order.size(); ++head) {
        Vertex v = order[head];
        for (std::size_t g = 0; g < rank; ++g) {
          for (Vertex w : {out[v * rank + g], in[v * rank + g]}) {
            if (w != undefined_vertex && relabel[w] == undefined_vertex) {
              relabel[w] = static_cast<Vertex>(order.size());
              order.push_back(w);
            }
          }
        }
      }
      SubgroupGraph result(rank);
      result._vertices = order.size();
      result._out.assign(order.size() * rank, undefined_vertex);
      result._in.assign(order.size() * rank, undefined_vertex);
      for (auto const& e : edges) {
        Vertex from = relabel[e.from];
        Vertex to   = relabel[e.to];
        if (from == undefined_vertex) {
          continue;
        }
        result._out[from * rank + e.gen] = to;
        result._in[to * rank + e.gen]    = from;
      }
      return result;
    }

    std::size_t         _rank;
    std::size_t         _vertices;
    std::vector<Vertex> _out;
    std::vector<Vertex> _in;
  };

  //! Membership: w labels a closed path at the base.
  inline bool contains(SubgroupGraph const& H, Word const& w) {
    auto end = H.read(w);
    return end && *end == 0;
  }

  //! The index [F_r : H], or nullopt when it is infinite.
  inline std::optional<std::size_t> index(SubgroupGraph const& H) {
    if (!H.is_complete()) {
      return std::nullopt;
    }
    return H.vertex_count();
  }

  //! Free rank of H, computed as E - V + 1.
  inline std::size_t subgroup_rank(SubgroupGraph const& H) {
    return H.edge_count() + 1 - H.vertex_count();
  }

  //! \brief The breadth-first spanning tree of a subgroup graph, together
  //! with the free basis it determines.
  //!
  //! `prefix[v]` is the tree path label from the base to v. Each edge not in
  //! the tree gives the basis element `prefix[from] * gen * prefix[to]^-1`;
  //! the basis is listed in order of (from, gen).
  class SpanningTree {
   public:
    explicit SpanningTree(SubgroupGraph const& H)
        : _rank(H.rank()), _prefix(H.vertex_count(), Word(H.rank())),
          _basis_id(H.vertex_count() * H.rank(), npos) {
      std::vector<bool> in_tree(H.vertex_count() * H.rank(), false);
      std::vector<bool> seen(H.vertex_count(), false);
      std::vector<Vertex> order{0};
      seen[0] = true;
      for (std::size_t head = 0; head < order.size(); ++head) {
        Vertex v = order[head];
        for (std::size_t g = 0; g < _rank; ++g) {
          Vertex w = H.out(v, g);
          if (w != undefined_vertex && !seen[w]) {
            seen[w]            = true;
            in_tree[v * _rank + g] = true;
            _prefix[w] = _prefix[v] * Word(_rank, {make_letter(g)});
            order.push_back(w);
          }
          w = H.in(v, g);
          if (w != undefined_vertex && !seen[w]) {
            seen[w]            = true;
            in_tree[w * _rank + g] = true;
            _prefix[w] = _prefix[v] * Word(_rank, {make_letter(g, true)});
            order.push_back(w);
          }
        }
      }
      for (auto const& e : H.edges()) {
        if (in_tree[e.from * _rank + e.gen]) {
          continue;
        }
        _basis_id[e.from * _rank + e.gen] = _basis.size();
        _basis.push_back(_prefix[e.from] * Word(_rank, {make_letter(e.gen)})
                         * invert(_prefix[e.to]));
      }
    }

    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    [[nodiscard]] std::vector<Word> const& basis() const noexcept {
      return _basis;
    }
    [[nodiscard]] Word const& prefix(Vertex v) const {
      return _prefix[v];
    }
    //! Index into basis() of the edge (from, gen), or npos for a tree edge.
    [[nodiscard]] std::size_t basis_id(Vertex from, std::size_t gen) const {
      return _basis_id[from * _rank + gen];
    }

   private:
    std::size_t              _rank;
    std::vector<Word>        _prefix;
    std::vector<Word>        _basis;
    std::vector<std::size_t> _basis_id;
  };

  inline std::vector<Word> basis(SubgroupGraph const& H) {
    return SpanningTree(H).basis();
  }

  //! One letter of a word over a subgroup basis: basis element `id`, inverted
  //! when `inverse` is set.
  struct BasisLetter {
    std::size_t id;
    bool        inverse;

    friend bool operator==(BasisLetter const&, BasisLetter const&) = default;
  };

  //! Rewrites w as a product of basis(H) elements (Reidemeister-Schreier),
  //! or nullopt when w is not in H.
  inline std::optional<std::vector<BasisLetter>>
  express(SubgroupGraph const& H, SpanningTree const& tree, Word const& w) {
    H.check_rank(w);
    std::vector<BasisLetter> out;
    Vertex                   v = 0;
    for (Letter x : w.letters()) {
      std::size_t g = generator_of(x);
      Vertex      next = H.follow(v, x);
      if (next == undefined_vertex) {
        return std::nullopt;
      }
      Vertex      from = is_inverse_letter(x) ? next : v;
      std::size_t id   = tree.basis_id(from, g);
      if (id != SpanningTree::npos) {
        out.push_back({id, is_inverse_letter(x)});
      }
      v = next;
    }
    if (v != 0) {
      return std::nullopt;
    }
    return out;
  }

  inline std::optional<std::vector<BasisLetter>> express(SubgroupGraph const& H,
                                                         Word const& w) {
    return express(H, SpanningTree(H), w);
  }

  //! Normality. For finite index it suffices that every generator conjugate
  //! of every basis element stays in H. A finitely generated normal subgroup
  //! of F_r with r >= 2 is trivial or of finite index, so in infinite index
  //! only the trivial subgroup is normal.
  inline bool is_normal(SubgroupGraph const& H) {
    if (!H.is_complete()) {
      return H.edge_count() == 0;
    }
    auto gens = basis(H);
    for (std::size_t x = 0; x < H.rank(); ++x) {
      Word g = Word::generator(H.rank(), x);
      for (auto const& b : gens) {
        if (!contains(H, conjugate(b, g))) {
          return false;
        }
      }
    }
    return true;
  }

  //! \brief Left coset representatives of a finite-index subgroup.
  //!
  //! `reps[i]` represents the left coset `reps[i] H`; reading `reps[i]^-1`
  //! from the base lands at `vertex[i]`. `reps[0]` is the identity and the
  //! set is closed under taking suffixes (the Schreier property for left
  //! cosets). Representatives are found breadth-first, extending a known
  //! representative t to `x t` for positive generators x in increasing
  //! order. Each generator acts on the finite vertex set as a permutation,
  //! so positive extensions alone reach every coset. For H = ker(F_2 -> Z/3)
  //! this gives "", "a", "aa".
  struct Transversal {
    std::vector<Word>        reps;
    std::vector<Vertex>      vertex;
    std::vector<std::size_t> coset_of_vertex;

    [[nodiscard]] std::size_t size() const noexcept {
      return reps.size();
    }
  };

  inline Transversal schreier_transversal(SubgroupGraph const& H) {
    if (!H.is_complete()) {
      throw Error(ErrorKind::infinite_index,
                  "transversals exist only for finite-index subgroups");
    }
    std::size_t const rank = H.rank();
    Transversal       T;
    T.coset_of_vertex.assign(H.vertex_count(), SpanningTree::npos);
    T.coset_of_vertex[0] = 0;
    T.reps.emplace_back(rank);
    T.vertex.push_back(0);
    for (std::size_t head = 0; head < T.reps.size(); ++head) {
      for (std::size_t g = 0; g < rank; ++g) {
        // x t H corresponds to the vertex reached by reading t^-1 x^-1.
        Vertex u = H.in(T.vertex[head], g);
        if (T.coset_of_vertex[u] == SpanningTree::npos) {
          T.coset_of_vertex[u] = T.reps.size();
          T.reps.push_back(Word(rank, {make_letter(g)}) * T.reps[head]);
          T.vertex.push_back(u);
        }
      }
    }
    return T;
  }

  struct CosetDecomposition {
    std::size_t coset;
    Word        h;

    friend bool operator==(CosetDecomposition const&,
                           CosetDecomposition const&) = default;
  };

  //! Writes g = reps[coset] * h with h in H.
  inline CosetDecomposition left_coset_decompose(Word const&          g,
                                                 SubgroupGraph const& H,
                                                 Transversal const&   T) {
    if (!H.is_complete()) {
      throw Error(ErrorKind::infinite_index,
                  "left coset decomposition needs a finite-index subgroup");
    }
    Vertex      v = *H.read(invert(g));
    std::size_t t = T.coset_of_vertex[v];
    return {t, invert(T.reps[t]) * g};
  }

  //! Graphviz rendering; vertex 0 is the base and edge labels are generator
  //! letters.
  inline std::string to_dot(SubgroupGraph const& H,
                            std::string const&   name = "H") {
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    os << "  0 [shape=doublecircle];\n";
    for (Vertex v = 1; v < H.vertex_count(); ++v) {
      os << "  " << v << ";\n";
    }
    for (auto const& e : H.edges()) {
      os << "  " << e.from << " -> " << e.to << " [label=\""
         << static_cast<char>('a' + e.gen) << "\"];\n";
    }
    os << "}\n";
    return os.str();
  }

}  // namespace fdouble

#endif  // FDOUBLE_SUBGROUP_GRAPH_HPP_
