// The fiber product M = {(u, v) : u = v in Q} inside F_s x F_s for a finite
// presentation of Q, and the reduction of membership in M to the word
// problem of Q.

#ifndef FDOUBLE_MIHAILOVA_HPP_
#define FDOUBLE_MIHAILOVA_HPP_

#include <compare>
#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "perm_group.hpp"
#include "word.hpp"

namespace fdouble {

  struct FinitePresentation {
    std::size_t       rank = 0;
    std::vector<Word> relators;

    //! Parses "rank=2; relators=abAB,aaa". Relators must not reduce to 1.
    static FinitePresentation parse(std::string_view text) {
      FinitePresentation P;
      bool               have_rank = false;
      std::string_view   relators;
      while (!text.empty()) {
        auto semi  = text.find(';');
        auto field = text.substr(0, semi);
        text       = semi == std::string_view::npos ? std::string_view()
                                                    : text.substr(semi + 1);
        while (!field.empty() && field.front() == ' ') {
          field.remove_prefix(1);
        }
        while (!field.empty() && field.back() == ' ') {
          field.remove_suffix(1);
        }
        if (field.empty()) {
          continue;
        }
        auto eq = field.find('=');
        if (eq == std::string_view::npos) {
          throw Error(ErrorKind::malformed_input,
                      "expected key=value in presentation, got \""
                          + std::string(field) + "\"");
        }
        auto key   = field.substr(0, eq);
        auto value = field.substr(eq + 1);
        if (key == "rank") {
          try {
            P.rank = std::stoul(std::string(value));
          } catch (std::exception const&) {
            throw Error(ErrorKind::malformed_input,
                        "bad rank \"" + std::string(value) + "\"");
          }
          have_rank = true;
        } else if (key == "relators") {
          relators = value;
        } else {
          throw Error(ErrorKind::malformed_input,
                      "unknown presentation field \"" + std::string(key)
                          + "\"");
        }
      }
      if (!have_rank || P.rank > max_text_rank) {
        throw Error(ErrorKind::malformed_input,
                    "presentation needs rank=<1..26>");
      }
      P.relators = parse_word_list(relators, P.rank);
      for (auto const& r : P.relators) {
        if (r.empty()) {
          throw Error(ErrorKind::malformed_input,
                      "relators must be non-trivial reduced words");
        }
      }
      return P;
    }

    [[nodiscard]] std::string to_string() const {
      std::string out = "rank=" + std::to_string(rank) + "; relators=";
      for (std::size_t i = 0; i < relators.size(); ++i) {
        out += (i ? "," : "") + relators[i].to_string();
      }
      return out;
    }
  };

  //! An element of F_s x F_s.
  struct PairWord {
    Word left;
    Word right;

    //! Parses "(u, v)".
    static PairWord parse(std::string_view text, std::size_t rank) {
      while (!text.empty() && text.front() == ' ') {
        text.remove_prefix(1);
      }
      while (!text.empty() && text.back() == ' ') {
        text.remove_suffix(1);
      }
      auto comma = text.find(',');
      if (text.size() < 3 || text.front() != '(' || text.back() != ')'
          || comma == std::string_view::npos
          || text.find(',', comma + 1) != std::string_view::npos) {
        throw Error(ErrorKind::malformed_input,
                    "expected (word, word), got \"" + std::string(text) + "\"");
      }
      return {Word::parse(text.substr(1, comma - 1), rank),
              Word::parse(text.substr(comma + 1, text.size() - comma - 2),
                          rank)};
    }

    [[nodiscard]] std::string to_string() const {
      auto show = [](Word const& w) {
        return w.empty() ? std::string("1") : w.to_string();
      };
      return "(" + show(left) + "," + show(right) + ")";
    }

    friend PairWord operator*(PairWord const& p, PairWord const& q) {
      return {p.left * q.left, p.right * q.right};
    }
    friend PairWord invert(PairWord const& p) {
      return {invert(p.left), invert(p.right)};
    }

    friend bool operator==(PairWord const&, PairWord const&) = default;
    friend auto operator<=>(PairWord const&, PairWord const&) = default;
  };

  //! The diagonal pairs (a_i, a_i) followed by (1, r_j) for each relator.
  inline std::vector<PairWord> mihailova_generators(FinitePresentation const& P) {
    std::vector<PairWord> out;
    for (std::size_t i = 0; i < P.rank; ++i) {
      auto a = Word::generator(P.rank, i);
      out.push_back({a, a});
    }
    for (auto const& r : P.relators) {
      out.push_back({Word(P.rank), r});
    }
    return out;
  }

  //! Decides whether a word of F_s is trivial in the presented group.
  using WordProblemOracle = std::function<bool(Word const&)>;

  //! (u, v) is in M exactly when u v^-1 is trivial in Q.
  inline bool fiber_membership(PairWord const&           p,
                               FinitePresentation const& P,
                               WordProblemOracle const&  oracle) {
    if (p.left.rank() != P.rank || p.right.rank() != P.rank) {
      throw Error(ErrorKind::rank_mismatch,
                  "pair " + p.to_string() + " is not over the presentation's "
                      "generators");
    }
    return oracle(p.left * invert(p.right));
  }

  //! \brief Word problem solution by evaluation in a permutation image.
  //!
  //! Only a correct decision procedure when the images define a faithful
  //! representation of the presented group; construction checks just that
  //! every relator is killed.
  class FiniteQuotientOracle {
   public:
    FiniteQuotientOracle(FinitePresentation const& P, PermRep images)
        : _images(std::move(images)) {
      if (_images.gens.size() != P.rank) {
        throw Error(ErrorKind::malformed_input,
                    "need one permutation per generator, got "
                        + std::to_string(_images.gens.size()));
      }
      for (auto const& g : _images.gens) {
        if (g.size() != _images.degree || !is_bijection(g)) {
          throw Error(ErrorKind::malformed_input,
                      "generator image is not a permutation of degree "
                          + std::to_string(_images.degree));
        }
      }
      for (auto const& r : P.relators) {
        if (!(*this)(r)) {
          throw Error(ErrorKind::relator_violated,
                      "relator " + r.to_string()
                          + " is not killed by the permutation images");
        }
      }
    }

    [[nodiscard]] Perm image(Word const& w) const {
      Perm p = identity_perm(_images.degree);
      for (Letter x : w.letters()) {
        auto const& g = _images.gens[generator_of(x)];
        p = compose(p, is_inverse_letter(x) ? inverse_perm(g) : g);
      }
      return p;
    }

    bool operator()(Word const& w) const {
      return image(w) == identity_perm(_images.degree);
    }

   private:
    PermRep _images;
  };

  inline FiniteQuotientOracle finite_quotient_oracle(FinitePresentation const& P,
                                                     std::vector<Perm> images) {
    std::size_t degree = images.empty() ? 1 : images.front().size();
    return FiniteQuotientOracle(P, PermRep{degree, std::move(images)});
  }

  inline constexpr std::size_t default_ball_cap = 100'000;

  //! Every product of at most `radius` generators and their inverses,
  //! computed layer by layer. Throws resource_limit past `cap` elements.
  inline std::set<PairWord> enumerate_M_ball(std::vector<PairWord> const& gens,
                                             std::size_t                  radius,
                                             std::size_t cap = default_ball_cap) {
    std::size_t const     rank = gens.empty() ? 0 : gens.front().left.rank();
    std::vector<PairWord> letters;
    for (auto const& g : gens) {
      letters.push_back(g);
      letters.push_back(invert(g));
    }
    std::set<PairWord>    ball{PairWord{Word(rank), Word(rank)}};
    std::vector<PairWord> frontier(ball.begin(), ball.end());
    for (std::size_t step = 0; step < radius && !frontier.empty(); ++step) {
      std::vector<PairWord> next;
      for (auto const& p : frontier) {
        for (auto const& x : letters) {
          auto q = p * x;
          if (ball.insert(q).second) {
            if (ball.size() > cap) {
              throw Error(ErrorKind::resource_limit,
                          "ball enumeration exceeded " + std::to_string(cap)
                              + " pairs");
            }
            next.push_back(std::move(q));
          }
        }
      }
      frontier = std::move(next);
    }
    return ball;
  }

}  // namespace fdouble

#endif  // FDOUBLE_MIHAILOVA_HPP_
