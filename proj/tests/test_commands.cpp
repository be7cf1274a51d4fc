#include <gtest/gtest.h>

#include <regex>
#include <sstream>

#include "fdouble/commands.hpp"
#include "support.hpp"

namespace fdouble::cli {

  struct Result {
    int         code;
    std::string out;
    std::string err;
  };

  Result run_cmd(RunConfig cfg) {
    std::ostringstream out, err;
    int                code = run(cfg, out, err);
    return {code, out.str(), err.str()};
  }

  RunConfig make(std::string command, std::optional<std::string> gens = {},
                 std::optional<std::string> preset = {}) {
    RunConfig cfg;
    cfg.command = std::move(command);
    cfg.gens    = std::move(gens);
    cfg.preset  = std::move(preset);
    return cfg;
  }

  TEST(SubgroupInfo, Examples) {
    auto r = run_cmd(make("subgroup-info", "bA,abAA,aaa,aab"));
    EXPECT_EQ(r.code, exit_pass);
    EXPECT_NE(r.out.find("index: 3\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("rank: 4\n"), std::string::npos);
    EXPECT_NE(r.out.find("normal: true"), std::string::npos);
    EXPECT_NE(r.out.find("transversal: 1, a, aa"), std::string::npos);

    r = run_cmd(make("subgroup-info", ""));
    EXPECT_NE(r.out.find("index: infinite"), std::string::npos);
    EXPECT_NE(r.out.find("rank: 0\n"), std::string::npos);

    r = run_cmd(make("subgroup-info", "a,b"));
    EXPECT_NE(r.out.find("index: 1\n"), std::string::npos);
    EXPECT_NE(r.out.find("rank: 2\n"), std::string::npos);
  }

  TEST(SubgroupInfo, JsonAndDot) {
    auto cfg   = make("subgroup-info", {}, "rips");
    cfg.format = "json";
    auto j     = json::parse(run_cmd(cfg).out);
    EXPECT_EQ(j["index"], 3);
    EXPECT_EQ(j["subgroup_rank"], 4);
    EXPECT_EQ(j["normal"], true);
    EXPECT_EQ(subgroup_graph_from_json(j["graph"]), test::rips_H());

    cfg.format = "dot";
    EXPECT_NE(run_cmd(cfg).out.find("digraph"), std::string::npos);
  }

  TEST(SubgroupInfo, PresetsMatchTheirDescriptions) {
    auto graph = [](std::string_view name) {
      auto cfg   = make("", {}, std::string(name));
      return resolve_subgroup(cfg).graph;
    };
    EXPECT_EQ(graph("rips"), test::cyclic_kernel(3));
    EXPECT_EQ(graph("index2"), test::cyclic_kernel(2));
    EXPECT_EQ(graph("s3stab"), test::s3_stabilizer());
  }

  TEST(Errors, ExitCodes) {
    auto r = run_cmd(make("subgroup-info", "abz"));
    EXPECT_EQ(r.code, exit_parse_error);
    EXPECT_NE(r.err.find("MalformedInput"), std::string::npos);
    EXPECT_EQ(run_cmd(make("subgroup-info", {}, "nope")).code, exit_parse_error);
    EXPECT_EQ(run_cmd(make("no-such-command", "a")).code, exit_parse_error);

    auto cfg  = make("double-nf", "a,baB");
    cfg.words = {"1:a"};
    EXPECT_EQ(run_cmd(cfg).code, exit_precondition);
    cfg       = make("export-cover", "a,baB");
    EXPECT_EQ(run_cmd(cfg).code, exit_precondition);
  }

  TEST(DoubleNf, Examples) {
    auto nf = [](std::string word) {
      auto cfg  = make("double-nf", {}, "rips");
      cfg.words = {std::move(word)};
      auto r    = run_cmd(cfg);
      EXPECT_EQ(r.code, exit_pass) << r.err;
      return r.out;
    };
    EXPECT_EQ(nf("1:aaa"), "h:aaa\n");
    EXPECT_EQ(nf("1:a 2:A 2:a 1:A"), "identity\n");
    EXPECT_EQ(nf("1:a 2:A"), "1:a 2:aa h:AAA\n");
  }

  TEST(DoubleMul, ProductAndJson) {
    auto cfg  = make("double-mul", {}, "rips");
    cfg.words = {"1:a 2:a", "2:A 1:A"};
    EXPECT_EQ(run_cmd(cfg).out, "identity\n");
    cfg.words  = {"1:a", "2:A"};
    cfg.format = "json";
    auto j     = json::parse(run_cmd(cfg).out);
    FreeDouble L{FreeFactor(test::rips_H())};
    EXPECT_EQ(L.format(amalgam_from_json(j, L)), "1:a 2:aa h:AAA");
    EXPECT_EQ(j["tail"], "AAA");
  }

  TEST(KernelBasis, Text) {
    auto r = run_cmd(make("kernel-basis", {}, "rips"));
    EXPECT_EQ(r.out,
              "[G:H] = 3, rank of ker(phi1) = 2\n"
              "1:a 2:aa h:AAA    phi1 -> 1\n"
              "1:aa 2:a h:AAA    phi1 -> 1\n");
  }

  TEST(Witness, RipsSmallRun) {
    auto cfg    = make("witness", {}, "rips");
    cfg.samples = 100;
    cfg.seed    = 7;
    auto r      = run_cmd(cfg);
    ASSERT_EQ(r.code, exit_pass) << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(j["pass"], true);
    EXPECT_EQ(j["report"]["injectivity"]["samples"], 100);
    EXPECT_EQ(j["report"]["seed"], 7);
    EXPECT_EQ(j["virtual_product"]["r1"], 4);
    EXPECT_EQ(j["virtual_product"]["r2"], 2);
    EXPECT_EQ(j["virtual_product"]["index"], 3);
    EXPECT_EQ(j["witness"]["x1"], "h:bA");
    EXPECT_EQ(j["witness"]["y1"], "1:a 2:aa h:AAA");
    EXPECT_EQ(j["witness"]["context"]["H-generators"],
              json({"bA", "aaa", "aba", "Ab"}));

    // Reports re-parse into the same values.
    auto report = j["report"].get<VerificationReport>();
    EXPECT_EQ(json(report), j["report"]);
    EXPECT_EQ(json(j["virtual_product"].get<VirtualProductReport>()),
              j["virtual_product"]);

    // Byte-identical output for an identical configuration, and the worker
    // count does not change it.
    EXPECT_EQ(run_cmd(cfg).out, r.out);
    cfg.workers = 3;
    EXPECT_EQ(run_cmd(cfg).out, r.out);
  }

  TEST(Witness, Rejections) {
    auto r = run_cmd(make("witness", {}, "index2"));
    EXPECT_EQ(r.code, exit_precondition);
    EXPECT_NE(r.err.find("IndexTooSmall"), std::string::npos);

    auto cfg = make("witness", "aaa");
    cfg.rank = 1;
    r        = run_cmd(cfg);
    EXPECT_EQ(r.code, exit_precondition);
    EXPECT_NE(r.err.find("RankTooSmall"), std::string::npos);

    cfg        = make("witness", {}, "rips");
    cfg.n_gens = "bA,aa,abaBA,abb";
    r          = run_cmd(cfg);
    EXPECT_EQ(r.code, exit_precondition);
    EXPECT_NE(r.err.find("NotNormal"), std::string::npos);

    cfg         = make("witness", {}, "rips");
    cfg.samples = 0;
    EXPECT_EQ(run_cmd(cfg).code, exit_parse_error);
  }

  TEST(Witness, TextFormat) {
    auto cfg    = make("witness", {}, "s3stab");
    cfg.samples = 50;
    cfg.format  = "text";
    auto r      = run_cmd(cfg);
    EXPECT_EQ(r.code, exit_pass);
    EXPECT_NE(r.out.find("virtually F_7 x F_2, index 6"), std::string::npos)
        << r.out;
    EXPECT_NE(r.out.find("PASS"), std::string::npos);
  }

  std::size_t count(std::string const& text, std::regex const& re) {
    return static_cast<std::size_t>(std::distance(
        std::sregex_iterator(text.begin(), text.end(), re),
        std::sregex_iterator()));
  }

  TEST(ExportCover, Examples) {
    std::regex node(R"(^\s*v[12] \[)", std::regex::multiline);
    std::regex edge(R"re(^\s*v1 -- v2 \[label="([a-zA-Z]*)")re",
                    std::regex::multiline);

    auto rips = run_cmd(make("export-cover", {}, "rips")).out;
    EXPECT_EQ(count(rips, node), 2U);
    EXPECT_EQ(count(rips, edge), 3U);
    EXPECT_NE(rips.find("label=\"\""), std::string::npos);
    EXPECT_NE(rips.find("label=\"a\""), std::string::npos);
    EXPECT_NE(rips.find("label=\"aa\""), std::string::npos);

    auto whole = run_cmd(make("export-cover", "a,b")).out;
    EXPECT_EQ(count(whole, node), 2U);
    EXPECT_EQ(count(whole, edge), 1U);

    auto cfg   = make("export-cover", "bA,aaaaa,abAAAA,aabAAA,aaabAA,aaaab");
    auto five  = run_cmd(cfg).out;
    EXPECT_EQ(count(five, edge), 5U);
    cfg.format = "json";
    auto j     = json::parse(run_cmd(cfg).out);
    EXPECT_EQ(j["edges"].size(), 5U);
    EXPECT_EQ(j["edges"].size() - j["nodes"].size() + 1, 4U);
    EXPECT_EQ(j["kernel_rank"], 4);
  }

  TEST(Mihailova, Examples) {
    RunConfig cfg;
    cfg.command      = "mihailova";
    cfg.presentation = "rank=1; relators=aaa";
    cfg.images       = "(0 1 2)";
    cfg.pair         = "(aaa,1)";
    auto r           = run_cmd(cfg);
    EXPECT_EQ(r.code, exit_pass);
    EXPECT_NE(r.out.find("\nmember\n"), std::string::npos) << r.out;

    cfg.pair = "(a,1)";
    r        = run_cmd(cfg);
    EXPECT_NE(r.out.find("non-member"), std::string::npos);
    EXPECT_NE(r.out.find("image: (0 1 2)"), std::string::npos);

    cfg.presentation = "rank=2; relators=aa,bbb,abab";
    cfg.images       = "(0 1);(0 1 2)";
    cfg.pair         = "(ab,ab)";
    r                = run_cmd(cfg);
    EXPECT_NE(r.out.find("\nmember\n"), std::string::npos) << r.err;

    cfg.images = "(0 1);(0 1)";
    EXPECT_EQ(run_cmd(cfg).code, exit_precondition);
    cfg.images = "(0 1";
    EXPECT_EQ(run_cmd(cfg).code, exit_parse_error);
  }

}  // namespace fdouble::cli
