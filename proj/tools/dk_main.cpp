#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "dk/dk.h"

namespace fs = std::filesystem;

namespace {

struct Flags {
  bool json = false;
  bool strict = false;
  std::string grid;
};

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::stringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

dk_options* make_options(const Flags& f) {
  dk_options* o = dk_options_new();
  if (f.strict) dk_options_set_strict(o, 1);
  if (!f.grid.empty() && dk_options_set_grid(o, f.grid.c_str()) != DK_STATUS_OK) {
    std::cerr << "dk: " << dk_last_error() << "\n";
    dk_options_free(o);
    return nullptr;
  }
  if (const char* env = std::getenv("DK_MAX_DEGREE")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || dk_options_set_max_degree(o, static_cast<int>(v)) != DK_STATUS_OK) {
      std::cerr << "dk: DK_MAX_DEGREE must be a positive integer\n";
      dk_options_free(o);
      return nullptr;
    }
  }
  return o;
}

int cmd_run(const std::string& path, const Flags& f) {
  std::string src;
  if (!read_file(path, src)) {
    std::cerr << "dk: cannot read " << path << "\n";
    return 2;
  }
  dk_options* o = make_options(f);
  if (!o) return 2;
  dk_result* r = nullptr;
  dk_status s = dk_run_source(src.c_str(), o, &r);
  dk_options_free(o);
  if (s != DK_STATUS_OK) {
    std::cerr << "dk: " << dk_last_error() << "\n";
    return 2;
  }
  std::cout << (f.json ? dk_result_json(r) : dk_result_text(r));
  int code = dk_result_verdict(r);
  dk_result_free(r);
  return code;
}

int cmd_fmt(const std::string& path, bool in_place) {
  std::string src;
  if (!read_file(path, src)) {
    std::cerr << "dk: cannot read " << path << "\n";
    return 2;
  }
  char* out = nullptr;
  if (dk_format(src.c_str(), &out) != DK_STATUS_OK) {
    std::cerr << path << ": " << dk_last_error() << "\n";
    return 2;
  }
  if (in_place) {
    std::ofstream(path, std::ios::binary) << out;
  } else {
    std::cout << out;
  }
  dk_string_free(out);
  return 0;
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> v;
  std::stringstream ss(s);
  std::string l;
  while (std::getline(ss, l)) v.push_back(l);
  return v;
}

// Line diff from an LCS table; corpus files are small.
std::string diff(const std::string& expected, const std::string& actual) {
  auto a = lines_of(expected), b = lines_of(actual);
  std::vector<std::vector<int>> t(a.size() + 1, std::vector<int>(b.size() + 1, 0));
  for (std::size_t i = a.size(); i-- > 0;)
    for (std::size_t j = b.size(); j-- > 0;)
      t[i][j] = a[i] == b[j] ? t[i + 1][j + 1] + 1 : std::max(t[i + 1][j], t[i][j + 1]);
  std::string out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (i < a.size() && j < b.size() && a[i] == b[j]) {
      ++i, ++j;
    } else if (j < b.size() && (i == a.size() || t[i][j + 1] >= t[i + 1][j])) {
      out += "    +" + b[j++] + "\n";
    } else {
      out += "    -" + a[i++] + "\n";
    }
  }
  if (out.empty()) out = "    (trailing newline differs)\n";
  return out;
}

struct CorpusEntry {
  std::string name;
  std::string actual;
  std::string expected;
  bool have_expected = false;
  bool ran = false;
};

int cmd_corpus(const std::string& dir, const Flags& f, unsigned jobs, bool update) {
  if (!fs::is_directory(dir)) {
    std::cerr << "dk: not a directory: " << dir << "\n";
    return 2;
  }
  std::vector<CorpusEntry> entries;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".dk") entries.emplace_back().name = e.path().stem().string();
  }
  std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) { return x.name < y.name; });

  dk_options* o = make_options(f);
  if (!o) return 2;
  auto work = [&](std::size_t k) {
    CorpusEntry& e = entries[k];
    std::string src;
    fs::path base = fs::path(dir) / e.name;
    if (!read_file(base.string() + ".dk", src)) return;
    e.have_expected = read_file(base.string() + ".json", e.expected);
    dk_result* r = nullptr;
    if (dk_run_source(src.c_str(), o, &r) != DK_STATUS_OK) return;
    e.actual = dk_result_json(r);
    e.ran = true;
    dk_result_free(r);
  };
  jobs = std::max(1u, jobs);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < jobs; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t k = w; k < entries.size(); k += jobs) work(k);
    });
  }
  for (auto& t : pool) t.join();
  dk_options_free(o);

  std::size_t passed = 0;
  for (auto& e : entries) {
    if (update && e.ran) {
      std::ofstream((fs::path(dir) / (e.name + ".json")).string(), std::ios::binary) << e.actual;
      e.expected = e.actual;
      e.have_expected = true;
    }
    bool ok = e.ran && e.have_expected && e.actual == e.expected;
    passed += ok;
    std::cout << (ok ? "PASS  " : "FAIL  ") << e.name << "\n";
    if (!e.ran) std::cout << "    job could not be run\n";
    else if (!e.have_expected) std::cout << "    missing " << e.name << ".json\n";
    else if (!ok) std::cout << diff(e.expected, e.actual);
  }
  std::cout << entries.size() << " jobs, " << passed << " passed, " << entries.size() - passed << " failed\n";
  return passed == entries.size() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Poisson and Lie algebroid certificate engine"};
  app.require_subcommand(1);
  Flags flags;
  app.add_flag("--json", flags.json, "emit JSON certificates");
  app.add_flag("--strict", flags.strict, "treat sampled certificates as negative");
  app.add_option("--seed-grid", flags.grid, "comma separated sample values, e.g. -2,-1,1,2,3");

  std::string file, dir;
  bool in_place = false, update = false;
  unsigned jobs = 1;
  auto* run = app.add_subcommand("run", "run a job file");
  run->add_option("file", file, "job file")->required();
  auto* corpus = app.add_subcommand("corpus", "run every *.dk job in a directory against its expected *.json");
  corpus->add_option("dir", dir, "corpus directory")->required();
  corpus->add_option("-j,--jobs", jobs, "parallel workers");
  corpus->add_flag("--update", update, "rewrite expected files from current output");
  auto* fmt = app.add_subcommand("fmt", "print the canonical form of a job file");
  fmt->add_option("file", file, "job file")->required();
  fmt->add_flag("-i,--in-place", in_place, "rewrite the file");
  app.fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (*run) return cmd_run(file, flags);
  if (*corpus) return cmd_corpus(dir, flags, jobs, update);
  return cmd_fmt(file, in_place);
}
