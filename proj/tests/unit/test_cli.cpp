#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "g2aa/cli.hpp"

using namespace g2aa;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "g2aa");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(G2AA_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("certify") {
  const Run ok = run({"certify", "--form", data("phi_minus.json")});
  CHECK(ok.code == kExitOk);
  CHECK(ok.out.find("G2, definite, adapted, stab dim 14") != std::string::npos);
  const Run witt = run({"--format", "json", "certify", "--form", data("witt_phi.json")});
  CHECK(witt.code == kExitOk);
  CHECK(witt.out.find("\"eps\"") != std::string::npos);
  CHECK(run({"certify", "--form", data("e123.json")}).code == kExitRejected);
  CHECK(run({"certify", "--form", data("missing.json")}).code == kExitInternal);
}

TEST_CASE("report and model") {
  const Run r = run({"--format", "json", "report", "--input", data("example_a_algebra.json"), "--form", data("witt_phi.json")});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("\"hol_dim\": 3") != std::string::npos);
  const Run m = run({"model", "rho_0"});
  CHECK(m.code == kExitOk);
  CHECK(m.out.find("e^{126}") != std::string::npos);
  CHECK(run({"model", "psi"}).code != kExitOk);
}

TEST_CASE("decide") {
  const Run yes = run({"decide", "--input", data("example_a_algebra.json"), "--mode", "g2", "--kind", "calibrated"});
  CHECK(yes.code == kExitOk);
  CHECK(yes.out.find("true") != std::string::npos);
  const Run undecided = run({"decide", "--input", data("example_b_algebra.json"), "--mode", "g2star_deg", "--kind", "calibrated"});
  CHECK(undecided.code == kExitRejected);
  CHECK(undecided.out.find("undecidable") != std::string::npos);
}

TEST_CASE("nilpotent") {
  const Run r = run({"nilpotent", "--input", data("nilpotent_n73.json"), "--pipeline"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("n_{7,3}") != std::string::npos);
}

TEST_CASE("reproduce") {
  CHECK(run({"reproduce", "witt"}).code == kExitOk);
  CHECK(run({"reproduce", "stabilizers"}).code == kExitOk);
  // The golden literal for star phi differs from the computed dual form in
  // the sign of its f^{1256} and f^{3456} terms.
  CHECK(run({"reproduce", "g2metric"}).code == kExitMismatch);
  CHECK(run({"reproduce", "nonsense"}).code != kExitOk);
}
