#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + LIFTCAT_BIN + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string data(const std::string& f) { return std::string(LIFTCAT_DATA) + "/" + f; }

fs::path scratch() {
  fs::path d = fs::temp_directory_path() / ("liftcat_cli_" + std::to_string(::getpid()));
  fs::create_directories(d);
  return d;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write(const fs::path& p, const std::string& s) { std::ofstream(p) << s; }

bool has(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("version") {
  Run r = run("version");
  CHECK(r.code == 0);
  CHECK(has(r.out, "liftcat 1.0.0"));
}

TEST_CASE("check passes and fails with exit codes") {
  Run a = run("check category " + data("finset0123.fincat"));
  CHECK(a.code == 0);
  CHECK(a.out.rfind("liftcat-report v1\n", 0) == 0);
  CHECK(has(a.out, "status=pass"));
  CHECK(run("check effectus " + data("finset0123.fincat")).code == 0);
  CHECK(run("check fpe " + data("pfn22.fincat") + " --unit I").code == 0);
  CHECK(run("check finpac " + data("pfn22.fincat")).code == 0);
  Run e = run("check effectus " + data("pfn22.fincat"));
  CHECK(e.code == 1);
  CHECK(has(e.out, "effectus.final"));
  // 1+1+1 missing: reported, not an error
  Run n = run("check effectus " + data("finset012.fincat"));
  CHECK(n.code == 0);
  CHECK(has(n.out, "status=not-checkable"));
}

TEST_CASE("input errors exit 2") {
  fs::path d = scratch();
  write(d / "bad.fincat", "fincat v1\nobjects:\n");
  CHECK(run("check category " + (d / "bad.fincat").string()).code == 2);
  CHECK(run("check category " + (d / "missing.fincat").string()).code == 2);
  CHECK(run("check fpe " + data("pfn22.fincat") + " --unit Q").code == 2);
  CHECK(run("frobnicate").code != 0);
  CHECK(run("demo pfn --sizes a,b").code == 2);
}

TEST_CASE("pcm files") {
  fs::path d = scratch();
  write(d / "bool.pcm", "pcm v1\nelements: 0 1\nzero: 0\none: 1\n1 * 1 = 1\n");
  Run r = run("check pcm " + (d / "bool.pcm").string());
  CHECK(r.code == 0);
  write(d / "idem.pcm", "pcm v1\nelements: 0 a\nzero: 0\na + a = a\n");
  CHECK(run("check pcm " + (d / "idem.pcm").string() + " --level gea").code == 1);
}

TEST_CASE("ssmat files") {
  fs::path d = scratch();
  write(d / "ok.ssmat", "ssmat v1\nmonoid: rational\nshape: 2 2\n1/2 1/4\n0 1\n");
  CHECK(run("check ssmat " + (d / "ok.ssmat").string()).code == 0);
  write(d / "over.ssmat", "ssmat v1\nshape: 2 1\n2/3 1/2\n");
  Run r = run("check ssmat " + (d / "over.ssmat").string());
  CHECK(r.code == 1);
  CHECK(has(r.out, "ssmat.column-total"));
}

TEST_CASE("construct kleisli output re-parses and checks") {
  fs::path d = scratch();
  fs::path out = d / "kl.fincat";
  Run r = run("construct kleisli " + data("finset0123.fincat") + " -o " + out.string());
  CHECK(r.code == 0);
  CHECK(has(r.out, "arrows=23"));
  REQUIRE(fs::exists(out));
  CHECK(run("check category " + out.string()).code == 0);
  CHECK(run("check fpe " + out.string()).code == 0);
  CHECK(run("check finpac " + out.string()).code == 0);
  // Tot of the result gives back the total part
  fs::path tot = d / "tot.fincat";
  CHECK(run("construct tot " + out.string() + " -o " + tot.string()).code == 0);
  CHECK(run("check effectus " + tot.string()).code == 0);
}

TEST_CASE("construct without I + I fails honestly") {
  fs::path d = scratch();
  // Kl objects are the X with X + 1 listed: 0 and 1. I + I = 2 is not among them,
  // so Pred(X) = Hom(X, I) has no sum table.
  Run r = run("construct kleisli " + data("finset012.fincat") + " -o " + (d / "x.fincat").string());
  CHECK(r.code == 1);
  CHECK(has(r.out, "status=fail"));
  CHECK(has(r.out, "note.0=objects=2"));
  CHECK(has(r.out, "note.1=arrows=5"));
  CHECK(has(r.out, "fpe.pred-table"));
}

TEST_CASE("roundtrip on the smallest model") {
  fs::path d = scratch();
  fs::path out = d / "small.rt";
  Run r = run("construct roundtrip " + data("finset012.fincat") + " -o " + out.string());
  CHECK(r.code == 0);
  // phi covers B on {X : X + 1 listed} = {0, 1}: n^m summed
  std::uint64_t want = 0;
  for (std::uint64_t m : {0, 1})
    for (std::uint64_t n : {0, 1}) {
      std::uint64_t k = 1;
      for (std::uint64_t i = 0; i < m; ++i) k *= n;
      want += k;
    }
  std::string t = slurp(out);
  CHECK(has(t, "entries: " + std::to_string(want) + "\n"));
  std::uint64_t lines = 0;
  for (std::size_t p = t.find("phi: "); p != std::string::npos; p = t.find("phi: ", p + 1)) ++lines;
  CHECK(lines == want);
  CHECK(has(r.out, "reason=1 + 1 is not a chosen coproduct"));
}

TEST_CASE("construct tot of pfn") {
  fs::path d = scratch();
  fs::path out = d / "tot.fincat";
  Run r = run("construct tot " + data("pfn0123.fincat") + " -o " + out.string());
  CHECK(r.code == 0);
  CHECK(has(r.out, "arrows=60"));
  CHECK(run("check effectus " + out.string()).code == 0);
}

TEST_CASE("roundtrip files") {
  fs::path d = scratch();
  fs::path b = d / "b.rt", c = d / "c.rt";
  CHECK(run("construct roundtrip " + data("finset0123.fincat") + " -o " + b.string()).code == 0);
  std::string tb = slurp(b);
  CHECK(tb.rfind("roundtrip v1\nside: b\nentries: 11\n", 0) == 0);
  CHECK(has(tb, "phi: "));
  CHECK(run("construct roundtrip " + data("pfn22.fincat") + " --unit I -o " + c.string()).code == 0);
  std::string tc = slurp(c);
  CHECK(has(tc, "side: c"));
  CHECK(has(tc, "entries: 5"));
}

TEST_CASE("model writes a checkable file") {
  fs::path d = scratch();
  fs::path out = d / "p.fincat";
  CHECK(run("model pfn --sizes 0,1,2 --name 1=I -o " + out.string()).code == 0);
  CHECK(run("check fpe " + out.string() + " --unit I").code == 0);
  CHECK(has(slurp(out), "I"));
}

TEST_CASE("demos") {
  Run p = run("demo pfn");
  CHECK(p.code == 0);
  Run s = run("demo substochastic --samples 200");
  CHECK(s.code == 0);
  CHECK(has(s.out, "mode=sampled(seed=7,n=200)"));
  Run q = run("demo substochastic --samples 100 --monoid pair");
  CHECK(q.code == 1);
  CHECK(has(q.out, "div.unique"));
  Run v = run("demo convex --samples 100 --sum '1/2|x@1/2> + 1/2|*>'");
  CHECK(v.code == 0);
  CHECK(has(v.out, "1/4"));
  Run cp = run("demo convex --samples 50 --monoid pair");
  CHECK(cp.code == 0);
  CHECK(has(cp.out, "status=not-checkable"));
  CHECK(has(cp.out, "reason=division unavailable"));
  Run full = run("demo substochastic --seed 7 --samples 1000");
  CHECK(full.code == 0);
  CHECK(has(full.out, "status=pass"));
  CHECK(has(full.out, "mode=sampled(seed=7,n=1000)"));
  Run small = run("demo pfn --sizes 0,1,2");
  CHECK(small.code == 0);
  CHECK(small.out.find("status=fail") == std::string::npos);
  CHECK(small.out.find("status=not-checkable") == std::string::npos);
}

TEST_CASE("json output and determinism") {
  Run a = run("--format json demo substochastic --samples 150 --seed 3");
  Run b = run("--serial demo substochastic --samples 150", "LIFTCAT_FORMAT=json LIFTCAT_SEED=3");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["format"] == "liftcat-report v1");
  CHECK(j["report"]["status"] == "pass");
  CHECK(j["report"]["mode"] == "sampled(seed=3,n=150)");
  Run c = run("--format json --seed 4 demo substochastic --samples 150");
  CHECK(nlohmann::json::parse(c.out)["report"]["mode"] == "sampled(seed=4,n=150)");
}
