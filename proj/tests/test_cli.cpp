#include "agemo/cli.hpp"
#include "agemo/algebra_io.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace agemo;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(AGEMO_DATA_DIR) + "/" + name; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("g-status golden") {
    Run r = run({"compute", "lambda:q=2", "M:alpha=2", "g-status"});
    CHECK(r.code == 0);
    const char* golden = R"J({
  "algebra": "Lambda",
  "module": {
    "name": "M(q)",
    "side": "left",
    "dim": 3
  },
  "op": "g-status",
  "result": {
    "G1": {
      "holds": true,
      "level": "up-to-horizon",
      "horizon": 20
    },
    "G2": {
      "holds": true,
      "level": "up-to-horizon",
      "horizon": 20
    },
    "G3": {
      "holds": false,
      "level": "exact",
      "horizon": 20
    }
  }
}
)J";
    CHECK(r.out == golden);
  }

  TEST_CASE("explore M(0) as DOT: one node with a loop") {
    Run r = run({"explore", "lambda:q=2", "M:alpha=0", "--dot"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "digraph omho {\n  label=\"Atilde_0 (horizon 12)\";\n  rankdir=LR;\n  n0 [label=\"M(0)\"];\n  n0 -> n0;\n}\n");
  }

  TEST_CASE("ext golden in text form") {
    Run r = run({"compute", "lambda", "M:alpha=1", "ext", "--horizon", "5", "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out.find("result.ext: 2 5 9 18 36\n") != std::string::npos);
  }

  TEST_CASE("output is deterministic") {
    std::vector<std::string> args{"explore", "lambda:q=2", "M:alpha=3", "--walk-horizon", "3"};
    Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    Run c = run({"compute", "lambda", "mL:alpha=2", "cosyzygy", "--seed", "7"});
    Run d = run({"compute", "lambda", "mL:alpha=2", "cosyzygy", "--seed", "7"});
    CHECK(c.out == d.out);
  }

  TEST_CASE("explore JSON parses back") {
    Run r = run({"explore", "lambda", "M:alpha=2", "--walk-horizon", "3"});
    REQUIRE(r.code == 0);
    ComponentReport rep = parse_report_json(r.out);
    CHECK(rep.shape == "open-left");
    CHECK(render_json(rep) == r.out);
  }

  TEST_CASE("compile is byte-identical to the data file") {
    Run a = run({"compile", "lambda:q=2"});
    Run b = run({"compile", data("lambda.quiver")});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    Run c = run({"compile", data("lambda.quiver"), "--q", "3"});
    CHECK(c.out != a.out);
    CHECK(c.out == run({"compile", "lambda:q=3"}).out);
  }

  TEST_CASE("validate and the table format") {
    Run v = run({"validate", data("lambda_tilde.quiver"), "--format", "text"});
    CHECK(v.code == 0);
    CHECK(v.out.find("dim: 12\n") != std::string::npos);
    CHECK(v.out.find("valid: true\n") != std::string::npos);
    std::string table = run({"compile", "lambda_prime"}).out;
    std::string path = "agemo_cli_test.table";
    {
      std::ofstream f(path);
      f << table;
    }
    CHECK(run({"validate", path}).code == 0);
    CHECK(run({"compute", path, "A:side=right", "dim", "--format", "text"}).out.find("result.dim: 4") != std::string::npos);
    CHECK(run({"compute", path, "M:alpha=1", "dim"}).code == 2);
    {
      std::ofstream f(path);
      f << "basis e a b\nunit 1 0 0\nmul e e = 1 0 0\nmul e a = 0 1 0\nmul e b = 0 0 1\nmul a e = 0 1 0\n"
           "mul b e = 0 0 1\nmul a a = 0 0 1\nmul b a = 0 0 1\n";
    }
    CHECK(run({"validate", path}).code == 1);
    std::remove(path.c_str());
  }

  TEST_CASE("--out writes the report to a file") {
    std::string path = "agemo_cli_out.json";
    Run r = run({"compute", "lambda", "M:alpha=2", "dim", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == run({"compute", "lambda", "M:alpha=2", "dim"}).out);
    std::remove(path.c_str());
  }

  TEST_CASE("exit codes for bad input") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"compute", "nope", "M:alpha=1", "dim"}).code == 2);
    CHECK(run({"compute", "lambda", "M:beta=1", "dim"}).code == 2);
    CHECK(run({"compute", "lambda", "M:alpha=1", "bogus"}).code == 2);
    CHECK(run({"compute", "lambda", "M:alpha=x", "dim"}).code == 2);
    CHECK(run({"compute", "lambda:q=0", "M:alpha=1", "dim"}).code == 2);
    CHECK(run({"validate", "/nonexistent/file.quiver"}).code == 2);
    CHECK(run({"compute", "lambda", "M:alpha=1", "dim", "--format", "dot"}).code == 2);
    CHECK(run({"compute", "lambda", "M:alpha=1", "dim", "--horizon", "0"}).code == 2);
    Run p = run({"validate", data("lambda.quiver") + ".missing"});
    CHECK(p.err.find("cannot open") != std::string::npos);
  }

  TEST_CASE("parse errors report positions") {
    std::string path = "agemo_cli_bad.quiver";
    {
      std::ofstream f(path);
      f << "quiver Q\nvertex 0\narrow x: 0 -> 0\nrelation x*w\n";
    }
    Run r = run({"validate", path});
    CHECK(r.code == 2);
    CHECK(r.err.find("4:") != std::string::npos);
    std::remove(path.c_str());
  }

  TEST_CASE("module specs") {
    for (std::string spec : {"A:side=left", "P:vertex=0,side=right", "S:vertex=0", "U:alpha=2", "Lm:alpha=1/2"})
      CHECK(run({"compute", "lambda", spec, "dim"}).code == 0);
    CHECK(run({"compute", "lambda_prime", "Mprime:alpha=inf", "torsionless"}).code == 0);
    CHECK(run({"compute", "lambda_tilde", "Mi:vertex=2,alpha=3", "indecomposable"}).code == 0);
    CHECK(run({"compute", "lambda_tilde", "P:vertex=2", "dim", "--format", "text"}).out.find("result.dim: 6") !=
          std::string::npos);
    CHECK(run({"compute", "lambda", "M:alpha=1", "dim", "--field", "F7"}).code == 0);
  }

  TEST_CASE("every operation runs") {
    for (const auto& op : cli::operation_names())
      CHECK_MESSAGE(run({"compute", "lambda", "M:alpha=3", op, "--horizon", "4"}).code == 0, op);
  }
}
