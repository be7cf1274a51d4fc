// Fixtures and independent oracles shared by the test suites.

#ifndef FDOUBLE_TESTS_SUPPORT_HPP_
#define FDOUBLE_TESTS_SUPPORT_HPP_

#include <cstddef>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "fdouble/fdouble.hpp"

namespace fdouble::test {

  inline Word W(std::string_view text, std::size_t rank = 2) {
    return Word::parse(text, rank);
  }

  inline std::vector<Word> Ws(std::string_view text, std::size_t rank = 2) {
    return parse_word_list(text, rank);
  }

  inline SubgroupGraph subgroup(std::string_view gens, std::size_t rank = 2) {
    return SubgroupGraph::from_generators(Ws(gens, rank), rank);
  }

  //! ker(F_rank -> Z/m) with every generator mapped to 1, built from the
  //! permutation action rather than from generators.
  inline SubgroupGraph cyclic_kernel(std::size_t m, std::size_t rank = 2) {
    Perm shift(m);
    for (std::size_t i = 0; i < m; ++i) {
      shift[i] = static_cast<std::uint32_t>((i + 1) % m);
    }
    return stabilizer_graph(PermRep{m, std::vector<Perm>(rank, shift)});
  }

  inline SubgroupGraph rips_H() {
    return subgroup("bA,abAA,aaa,aab");
  }

  //! Stabilizer of 0 for a -> (0 1), b -> (0 1 2).
  inline SubgroupGraph s3_stabilizer() {
    return stabilizer_graph(
        PermRep{3, {parse_cycles("(0 1)", 3), parse_cycles("(0 1 2)", 3)}});
  }

  //! All freely reduced products of at most `max_factors` elements of gens
  //! and their inverses.
  inline std::set<Word> product_closure(std::vector<Word> const& gens,
                                        std::size_t rank, std::size_t max_factors) {
    std::vector<Word> letters;
    for (auto const& g : gens) {
      letters.push_back(g);
      letters.push_back(invert(g));
    }
    std::set<Word>    seen{Word(rank)};
    std::vector<Word> frontier{Word(rank)};
    for (std::size_t k = 0; k < max_factors; ++k) {
      std::vector<Word> next;
      for (auto const& u : frontier) {
        for (auto const& x : letters) {
          auto v = u * x;
          if (seen.insert(v).second) {
            next.push_back(std::move(v));
          }
        }
      }
      frontier = std::move(next);
    }
    return seen;
  }

  namespace detail {
    inline std::vector<Letter> half(Word const& w) {
      auto l = w.letters();
      return {l.begin(), l.begin() + static_cast<long>((l.size() + 1) / 2)};
    }

    // Length first, then the two initial halves of w and w^-1.
    inline auto nielsen_key(Word const& w) {
      auto p = half(w), q = half(invert(w));
      if (q < p) {
        std::swap(p, q);
      }
      return std::tuple(w.size(), p, q);
    }
  }  // namespace detail

  //! N1-N3 for the symmetrised set: no 1, |xy| >= |x|,|y| for x != y^-1, and
  //! |xyz| > |x| - |y| + |z| for x != y^-1, y != z^-1.
  inline bool is_nielsen_reduced(std::vector<Word> const& gens) {
    std::vector<Word> sym;
    for (auto const& g : gens) {
      if (g.empty()) {
        return false;
      }
      sym.push_back(g);
      sym.push_back(invert(g));
    }
    auto len = [](Word const& w) { return static_cast<long>(w.size()); };
    for (std::size_t i = 0; i < sym.size(); ++i) {
      for (std::size_t j = 0; j < sym.size(); ++j) {
        if (j == (i ^ 1U)) {
          continue;
        }
        auto xy = sym[i] * sym[j];
        if (len(xy) < len(sym[i]) || len(xy) < len(sym[j])) {
          return false;
        }
        for (std::size_t k = 0; k < sym.size(); ++k) {
          if (k != (j ^ 1U)
              && len(xy * sym[k]) <= len(sym[i]) - len(sym[j]) + len(sym[k])) {
            return false;
          }
        }
      }
    }
    return true;
  }

  //! \brief Nielsen reduction by repeated moves x -> x y^+-1, y^+-1 x that
  //! lower a well-founded key; 1 is dropped.
  //!
  //! For a Nielsen reduced set a reduced product of k factors has length at
  //! least k, so enumerating products of <= n factors finds every member of
  //! length <= n.
  inline std::vector<Word> nielsen_reduce(std::vector<Word> gens) {
    bool moved = true;
    while (moved) {
      moved = false;
      std::erase_if(gens, [](Word const& w) { return w.empty(); });
      for (std::size_t i = 0; i < gens.size() && !moved; ++i) {
        for (std::size_t j = 0; j < gens.size() && !moved; ++j) {
          if (i == j) {
            continue;
          }
          auto const key = detail::nielsen_key(gens[i]);
          for (auto const& y : {gens[j], invert(gens[j])}) {
            for (auto const& cand : {gens[i] * y, y * gens[i]}) {
              if (!moved && detail::nielsen_key(cand) < key) {
                gens[i] = cand;
                moved   = true;
              }
            }
          }
        }
      }
    }
    return gens;
  }

  //! Every freely reduced word of length <= max_len.
  inline std::vector<Word> all_words(std::size_t rank, std::size_t max_len) {
    std::vector<Word> out{Word(rank)};
    std::vector<Word> layer{Word(rank)};
    for (std::size_t k = 0; k < max_len; ++k) {
      std::vector<Word> next;
      for (auto const& u : layer) {
        for (Letter x = 0; x < 2 * rank; ++x) {
          auto v = u * Word(rank, {x});
          if (v.size() == u.size() + 1) {
            next.push_back(v);
          }
        }
      }
      out.insert(out.end(), next.begin(), next.end());
      layer = std::move(next);
    }
    return out;
  }

  //! \brief Identity test in G *_H G by the reduced-word theorem, with no
  //! transversal involved.
  //!
  //! Syllables lying in H are absorbed into a neighbour, adjacent syllables
  //! of the same copy are merged, and the word is trivial iff what remains
  //! is at most one syllable equal to 1.
  inline bool amalgam_word_is_trivial(std::vector<SyllableItem<Word>> items,
                                      SubgroupGraph const&            H) {
    bool changed = true;
    while (changed && items.size() > 1) {
      changed = false;
      for (std::size_t i = 0; i + 1 < items.size(); ++i) {
        auto& a = items[i];
        auto& b = items[i + 1];
        if (a.copy == b.copy || contains(H, b.element)) {
          a.element = a.element * b.element;
          items.erase(items.begin() + static_cast<long>(i) + 1);
          changed = true;
          break;
        }
        if (contains(H, a.element)) {
          b.element = a.element * b.element;
          items.erase(items.begin() + static_cast<long>(i));
          changed = true;
          break;
        }
      }
    }
    return items.empty() || (items.size() == 1 && items[0].element.empty());
  }

  //! Expands a normal form back into a syllable word.
  inline std::vector<SyllableItem<Word>> expand(FreeDouble const&             L,
                                                FreeDouble::value_type const& u) {
    std::vector<SyllableItem<Word>> items;
    for (auto const& s : u.syllables) {
      items.push_back({s.copy, L.representative(s)});
    }
    items.push_back({first_copy, u.tail});
    return items;
  }

  inline std::vector<SyllableItem<Word>>
  inverse_items(std::vector<SyllableItem<Word>> const& items) {
    std::vector<SyllableItem<Word>> out;
    for (auto it = items.rbegin(); it != items.rend(); ++it) {
      out.push_back({it->copy, invert(it->element)});
    }
    return out;
  }

  //! Random syllable word of `length` items with random copies and random
  //! factor elements of length <= max_word.
  template <typename Rng>
  std::vector<SyllableItem<Word>> random_syllable_word(Rng& rng, std::size_t rank,
                                                       std::size_t length,
                                                       std::size_t max_word) {
    std::uniform_int_distribution<int>         copy(1, 2);
    std::uniform_int_distribution<std::size_t> len(0, max_word);
    std::vector<SyllableItem<Word>>            items;
    for (std::size_t i = 0; i < length; ++i) {
      items.push_back({copy(rng), random_word(rng, rank, len(rng))});
    }
    return items;
  }

}  // namespace fdouble::test

#endif  // FDOUBLE_TESTS_SUPPORT_HPP_
