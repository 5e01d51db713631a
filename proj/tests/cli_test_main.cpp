// End-to-end checks of the geoinv binary: generate/eval/verify round trips
// and exit codes. Takes the binary path as argv[1]; exits nonzero on the
// first failure.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

namespace {

int failures = 0;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& cmd) {
  RunResult res;
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  if (!pipe) {
    res.output = "popen failed";
    return res;
  }
  char buf[4096];
  while (size_t got = fread(buf, 1, sizeof buf, pipe)) res.output.append(buf, got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

void expect(bool ok, const std::string& what, const RunResult& res) {
  if (ok) {
    std::cout << "ok: " << what << "\n";
  } else {
    ++failures;
    std::cout << "FAIL: " << what << "\n--- exit=" << res.exit_code << "\n" << res.output << "---\n";
  }
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_tests <path-to-geoinv>\n";
    return 2;
  }
  const std::string bin = argv[1];
  const auto dir = std::filesystem::temp_directory_path() / "geoinv_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = [&dir](const char* name) { return (dir / name).string(); };

  {
    std::ofstream pts(path("square.pts"));
    pts << "# unit square\n-1 -1\n1 -1\n-1 1\n1 1\n";
  }

  {
    const auto r = run(bin + " generate --dim 2 --parts 2:2 --class affine --out " + path("order2.inv"));
    expect(r.exit_code == 0 && contains(r.output, "basis=6 selected=2 d=4 pruned=2x2 kernel=1") &&
               contains(r.output, "invariants=1"),
           "generate 2:2 affine reports the expected counts", r);
  }
  {
    const auto r = run(bin + " eval --invariants " + path("order2.inv") + " --points " + path("square.pts"));
    expect(r.exit_code == 0 && contains(r.output, "value=0.0625"), "eval gives 1/16 on the unit square", r);
  }
  {
    const auto r = run(bin + " verify --invariants " + path("order2.inv") + " --trials 40 --seed 5");
    expect(r.exit_code == 0 && contains(r.output, "seed=5") && contains(r.output, "overall=pass"),
           "verify passes and echoes the seed", r);
  }
  {
    const auto r = run(bin + " generate --dim 3 --parts 3:4 --class affine --out " + path("v43.inv"));
    expect(r.exit_code == 0 && contains(r.output, "basis=715 selected=25 d=8 pruned=84x25 kernel=1"),
           "generate 3:4 affine reports the sparse system shape", r);
  }
  {
    const auto r = run(bin +
                       " generate --dim 2 --parts 2:1,5:2 --class rotation"
                       " --exclude-products 2:1,5:2 --out " +
                       path("mixed.inv"));
    expect(r.exit_code == 0 && contains(r.output, "invariants=6"),
           "product exclusion leaves 6 rotation invariants", r);
  }
  {
    const auto r = run(bin + " generate --dim 3 --parts 3:4 --class affine --planes all --out " +
                       path("v43all.inv"));
    expect(r.exit_code == 0 && contains(r.output, "planes=all") && contains(r.output, "kernel=1") &&
               contains(r.output, "invariants=1"),
           "full plane set gives the same kernel", r);
  }
  {
    const auto r = run(bin + " generate --dim 2 --parts 2:2 --class scale --out " + path("scale.inv"));
    expect(r.exit_code == 0 && contains(r.output, "selected=2"), "scale generation", r);
    const auto v = run(bin + " verify --invariants " + path("scale.inv") + " --class scale --trials 40");
    expect(v.exit_code == 0 && contains(v.output, "overall=pass"), "scale invariants verify", v);
  }
  {
    // a quantity that is not rotation invariant must drive exit code 1
    std::ofstream bad(path("bad.inv"));
    bad << "geoinv v1 dim=2\n\nclass=rotation d=0 desc=(2,1)\nterm 1/1 (2,0)^1\n";
    bad.close();
    const auto r = run(bin + " verify --invariants " + path("bad.inv") + " --trials 20 --seed 3");
    expect(r.exit_code == 1 && contains(r.output, "overall=fail"), "failed verification exits 1", r);
  }
  {
    const auto r = run(bin + " generate --dim 2 --parts nonsense --class affine --out " + path("x.inv"));
    expect(r.exit_code == 2, "bad --parts exits 2", r);
  }
  {
    const auto r = run(bin + " generate --dim 2 --parts 2:2 --class affine");
    expect(r.exit_code == 2, "missing --out exits 2", r);
  }
  {
    const auto r = run(bin + " eval --invariants " + path("missing.inv") + " --points " + path("square.pts"));
    expect(r.exit_code == 2, "missing invariant file exits 2", r);
  }
  {
    const auto r = run(bin + " frobnicate");
    expect(r.exit_code == 2, "unknown subcommand exits 2", r);
  }

  if (failures) {
    std::cout << failures << " CLI check(s) failed\n";
    return 1;
  }
  std::cout << "all CLI checks passed\n";
  return 0;
}
