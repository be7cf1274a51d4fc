// JSON forms of graphs, normal forms, witnesses and reports.

#ifndef FDOUBLE_SERIALIZE_HPP_
#define FDOUBLE_SERIALIZE_HPP_

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "amalgam.hpp"
#include "embedding.hpp"
#include "error.hpp"
#include "subgroup_graph.hpp"
#include "word.hpp"

namespace fdouble {

  using json = nlohmann::json;

  inline json words_to_json(std::vector<Word> const& words) {
    json out = json::array();
    for (auto const& w : words) {
      out.push_back(w.to_string());
    }
    return out;
  }

  //! {"vertices": n, "base": 0, "edges": [[from, gen, to], ...]}
  inline json to_json(SubgroupGraph const& H) {
    json edges = json::array();
    for (auto const& e : H.edges()) {
      edges.push_back({e.from, e.gen, e.to});
    }
    return {{"rank", H.rank()},
            {"vertices", H.vertex_count()},
            {"base", 0},
            {"edges", edges}};
  }

  inline SubgroupGraph subgroup_graph_from_json(json const& j) {
    try {
      std::size_t       rank = j.at("rank").get<std::size_t>();
      std::size_t       n    = j.at("vertices").get<std::size_t>();
      std::vector<Edge> edges;
      for (auto const& e : j.at("edges")) {
        Edge edge{e.at(0).get<Vertex>(), e.at(1).get<std::size_t>(),
                  e.at(2).get<Vertex>()};
        if (edge.from >= n || edge.to >= n || edge.gen >= rank) {
          throw Error(ErrorKind::malformed_input, "edge out of range");
        }
        edges.push_back(edge);
      }
      if (j.at("base").get<std::size_t>() != 0 || n == 0) {
        throw Error(ErrorKind::malformed_input, "base vertex must be 0");
      }
      return SubgroupGraph::from_edges(rank, n, std::move(edges));
    } catch (json::exception const& e) {
      throw Error(ErrorKind::malformed_input, e.what());
    }
  }

  //! {"syllables": [[copy, word], ...], "tail": word}
  inline json to_json(FreeDouble::value_type const& u, FreeDouble const& L) {
    json syllables = json::array();
    for (auto const& s : u.syllables) {
      syllables.push_back({s.copy, L.representative(s).to_string()});
    }
    return {{"syllables", syllables}, {"tail", u.tail.to_string()}};
  }

  inline FreeDouble::value_type amalgam_from_json(json const&       j,
                                                  FreeDouble const& L) {
    try {
      std::vector<SyllableItem<Word>> items;
      for (auto const& s : j.at("syllables")) {
        items.push_back({s.at(0).get<int>(),
                         Word::parse(s.at(1).get<std::string>(),
                                     L.factor().rank())});
      }
      items.push_back({subgroup_copy,
                       Word::parse(j.at("tail").get<std::string>(),
                                   L.factor().rank())});
      return normal_form(L, items);
    } catch (json::exception const& e) {
      throw Error(ErrorKind::malformed_input, e.what());
    }
  }

  inline void to_json(json& j, VerificationReport const& r) {
    j = json{{"pass", r.passed()},
             {"commutators",
              {{"checked", r.commutators_checked},
               {"pass", r.commutators_pass}}},
             {"kernel_conditions", r.kernel_conditions},
             {"injectivity",
              {{"samples", r.injectivity_samples},
               {"failures", r.injectivity_failures},
               {"max_len", r.max_len}}},
             {"seed", r.seed}};
  }

  inline void from_json(json const& j, VerificationReport& r) {
    r.commutators_checked  = j.at("commutators").at("checked");
    r.commutators_pass     = j.at("commutators").at("pass");
    r.kernel_conditions    = j.at("kernel_conditions");
    r.injectivity_samples  = j.at("injectivity").at("samples");
    r.injectivity_failures = j.at("injectivity").at("failures");
    r.max_len              = j.at("injectivity").at("max_len");
    r.seed                 = j.at("seed");
  }

  inline void to_json(json& j, VirtualProductReport const& r) {
    j = json{{"r1", r.r1},
             {"r2", r.r2},
             {"index", r.index},
             {"applicable", r.applicable}};
  }

  inline void from_json(json const& j, VirtualProductReport& r) {
    r.r1         = j.at("r1");
    r.r2         = j.at("r2");
    r.index      = j.at("index");
    r.applicable = j.at("applicable");
  }

  inline json to_json(Witness const& w) {
    auto const& ctx = *w.context;
    auto const& L   = ctx.L();
    return {{"x1", L.format(w.x1)},
            {"x2", L.format(w.x2)},
            {"y1", L.format(w.y1)},
            {"y2", L.format(w.y2)},
            {"context",
             {{"rank", ctx.rank()},
              {"H-generators", words_to_json(basis(ctx.H()))},
              {"N-generators", words_to_json(basis(ctx.N()))}}}};
  }

}  // namespace fdouble

#endif  // FDOUBLE_SERIALIZE_HPP_
