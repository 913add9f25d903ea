// ptl: command-line front end over the C API.
//
// Exit codes: 0 success or PASS, 1 usage / I/O / bound errors, 2 parse
// error, 3 non-planar input, 4 certificate or verification failure,
// 5 precondition violation.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "ptl/ptl.h"

using nlohmann::json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kNonPlanar = 3, kFailed = 4, kPrecondition = 5 };

struct Config {
  std::string in = "-";
  std::string out;
  std::string family = "K4+Theta5";
  std::string n_range;
  std::string format = "text";
  int k = 0;
  int spec = 0;
  int workers = 1;
  int outer_face = -1;
  bool long_run = false;
};

struct Error {
  int code;
  std::string message;
};

int exit_for(ptl_status s) {
  switch (s) {
    case PTL_OK: return kOk;
    case PTL_ERR_PARSE: return kParse;
    case PTL_ERR_NONPLANAR: return kNonPlanar;
    default: return kUsage;
  }
}

void check(ptl_status s) {
  if (s != PTL_OK) throw Error{exit_for(s), ptl_last_error()};
}

std::string take(char* s) {
  std::string out(s ? s : "");
  ptl_string_free(s);
  return out;
}

struct PlaneDeleter {
  void operator()(ptl_plane* p) const { ptl_plane_free(p); }
};
using Plane = std::unique_ptr<ptl_plane, PlaneDeleter>;

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error{kUsage, "cannot open " + path};
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw Error{kUsage, "cannot write " + path};
}

Plane load(const Config& c) {
  std::string text = read_input(c.in);
  ptl_plane* raw = nullptr;
  char* witness = nullptr;
  ptl_status s = ptl_plane_from_text(text.c_str(), &raw, &witness);
  if (s == PTL_ERR_NONPLANAR) {
    std::string msg = ptl_last_error();
    if (witness) {
      json w = json::parse(take(witness));
      if (c.format == "json") {
        std::cout << json{{"schema_version", PTL_SCHEMA_VERSION}, {"report", "nonplanar"}, {"witness", w}}.dump(2)
                  << "\n";
      } else {
        std::cout << "not planar: " << w["kind"].get<std::string>() << " subdivision\n";
        std::cout << "branch vertices:";
        for (int v : w["branch"]) std::cout << " " << v;
        std::cout << "\n";
        for (const auto& p : w["paths"]) {
          std::cout << "  path";
          for (int v : p) std::cout << " " << v;
          std::cout << "\n";
        }
      }
    }
    throw Error{kNonPlanar, msg};
  }
  check(s);
  Plane p(raw);
  if (c.outer_face >= 0) check(ptl_plane_set_outer(p.get(), c.outer_face));
  return p;
}

int max_n_bound() {
  const char* env = std::getenv("PTL_MAX_N");
  if (!env || !*env) return 10;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end || v < 3 || v > 30) throw Error{kUsage, "PTL_MAX_N must be an integer in 3..30"};
  return static_cast<int>(v);
}

std::pair<int, int> parse_range(const std::string& s) {
  auto to_int = [&](const std::string& t) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(t, &used);
    } catch (...) {
      used = 0;
    }
    if (t.empty() || used != t.size()) throw Error{kUsage, "bad --n value '" + s + "'"};
    return v;
  };
  auto dots = s.find("..");
  if (dots == std::string::npos) {
    int v = to_int(s);
    return {v, v};
  }
  return {to_int(s.substr(0, dots)), to_int(s.substr(dots + 2))};
}

std::string list(const json& a) {
  std::string s;
  for (const auto& x : a) s += (s.empty() ? "" : " ") + x.dump();
  return s;
}

int emit(const Config& c, const json& j, const std::function<void(const json&)>& text) {
  if (c.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    text(j);
  return kOk;
}

int cmd_faces(const Config& c) {
  auto p = load(c);
  json j = json::parse(take([&] {
    char* s = nullptr;
    check(ptl_faces_json(p.get(), &s));
    return s;
  }()));
  return emit(c, j, [](const json& j) {
    std::cout << "n=" << j["n"] << " e=" << j["e"] << " f=" << j["f"] << " outer=" << j["outer"] << "\n";
    for (const auto& f : j["faces"])
      std::cout << "face " << f["index"] << " (length " << f["length"] << "): " << list(f["walk"]) << "\n";
  });
}

int cmd_decompose(const Config& c) {
  auto p = load(c);
  char* s = nullptr;
  check(ptl_decompose_json(p.get(), &s));
  json j = json::parse(take(s));
  return emit(c, j, [](const json& j) {
    std::cout << j["blocks"].size() << " triangular blocks (outer face " << j["outer"] << ")\n";
    for (const auto& b : j["blocks"]) {
      std::cout << "  " << std::left << std::setw(12) << b["class"].get<std::string>() << " vertices "
                << list(b["vertices"]);
      if (b.contains("signature")) std::cout << "  [" << b["signature"].get<std::string>() << "]";
      std::cout << "\n";
    }
    std::cout << "counts:";
    for (auto& [k, v] : j["counts"].items()) std::cout << " " << k << "=" << v;
    std::cout << "\n";
  });
}

int cmd_discharge(const Config& c) {
  auto p = load(c);
  char* s = nullptr;
  ptl_verdict verdict = PTL_REPORT;
  check(ptl_discharge_json(p.get(), &s, &verdict));
  json j = json::parse(take(s));
  emit(c, j, [](const json& j) {
    std::cout << "n=" << j["n"] << " e=" << j["e"] << " f=" << j["f"] << " outer=" << j["outer"] << "\n";
    std::cout << std::left << std::setw(14) << "block" << std::setw(6) << "e(B)" << std::setw(12) << "f(B)"
              << "c(B)\n";
    for (const auto& b : j["blocks"])
      std::cout << std::setw(14) << b["class"].get<std::string>() << std::setw(6) << b["e"].get<int>()
                << std::setw(12) << b["f"].get<std::string>() << b["c"].get<std::string>() << "\n";
    const auto& t = j["totals"];
    std::cout << "f(G)=" << t["f"].get<std::string>() << " e(G)=" << t["e"] << " c(G)=" << t["c"].get<std::string>()
              << "\n";
    std::cout << "identities:";
    for (auto& [k, v] : j["identities"].items()) std::cout << " " << k << "=" << (v.get<bool>() ? "ok" : "BROKEN");
    std::cout << "\n";
    for (const auto& v : j["violations"]) std::cout << "precondition: " << v.get<std::string>() << "\n";
    const auto& b = j["bound_chain"];
    std::cout << "reduction:";
    for (const auto& st : b["reduction"]["steps"]) std::cout << " " << st["vertex"] << "(" << st["degree"] << ")";
    std::cout << (b["reduction"]["steps"].empty() ? " none" : "") << "\n";
    std::cout << "25n-11e=" << b["value"];
    if (b["core_empty"].get<bool>())
      std::cout << " core empty, n+37=" << b["n_plus_37"];
    else
      std::cout << " core blocks b2=" << b["b2"] << " b3=" << b["b3"] << " b4=" << b["b4"] << " b5=" << b["b5"]
                << " lower bound " << b["lower_bound"];
    std::cout << " (" << b["verdict"].get<std::string>() << ")\n";
    std::cout << "verdict: " << j["verdict"].get<std::string>() << "\n";
  });
  switch (verdict) {
    case PTL_PASS: return kOk;
    case PTL_FAIL: return kFailed;
    case PTL_PRECONDITION: return kPrecondition;
    default: return kOk;
  }
}

int cmd_search(const Config& c) {
  if (c.n_range.empty()) throw Error{kUsage, "search needs --n"};
  if (c.workers < 1) throw Error{kUsage, "--workers must be at least 1"};
  auto [lo, hi] = parse_range(c.n_range);
  ptl_search_options opts{c.workers, max_n_bound(), c.long_run ? 1 : 0};
  char* s = nullptr;
  check(ptl_search_json(c.family.c_str(), lo, hi, &opts, &s));
  json j = json::parse(take(s));
  if (!c.out.empty()) {
    std::string lines;
    for (const auto& r : j["rows"])
      if (r.contains("witnesses"))
        for (const auto& w : r["witnesses"]) lines += w.get<std::string>() + "\n";
    write_output(c.out, lines);
  }
  return emit(c, j, [](const json& j) {
    std::cout << "family " << j["family"].get<std::string>() << "\n";
    std::cout << std::right << std::setw(4) << "n" << std::setw(7) << "ex" << std::setw(7) << "bound" << std::setw(7)
              << "slack"
              << "  note\n";
    for (const auto& r : j["rows"]) {
      std::string note;
      if (r["flagged"].get<bool>()) note += "negative slack";
      if (r["witness_only"].get<bool>()) note += std::string(note.empty() ? "" : ", ") + "witness-only lower bound";
      if (r["disconnected"].get<bool>()) note += std::string(note.empty() ? "" : ", ") + "disconnected optimum";
      std::cout << std::setw(4) << r["n"].get<int>() << std::setw(7) << r["ex"].get<int>() << std::setw(7)
                << r["bound"].get<long long>() << std::setw(7) << r["slack"].get<long long>() << "  " << note << "\n";
    }
  });
}

int cmd_construct(const Config& c) {
  ptl_plane* raw = nullptr;
  check(ptl_construct(c.k, &raw));
  Plane p(raw);
  char* s = nullptr;
  check(ptl_plane_to_embedding(p.get(), &s));
  std::string text = take(s);
  if (c.out.empty()) {
    std::cout << text;
    return kOk;
  }
  write_output(c.out, text);
  int f = 0;
  check(ptl_plane_face_count(p.get(), &f));
  json j{{"schema_version", PTL_SCHEMA_VERSION}, {"report", "construct"}, {"k", c.k},
         {"n", 88 * c.k + 24},  {"e", 200 * c.k + 50},  {"f", f}, {"out", c.out}};
  return emit(c, j, [](const json& j) {
    std::cout << "wrote " << j["out"].get<std::string>() << ": n=" << j["n"] << " e=" << j["e"] << " f=" << j["f"]
              << "\n";
  });
}

int cmd_verify(const Config& c) {
  auto p = load(c);
  char* s = nullptr;
  int pass = 0;
  check(ptl_verify_json(p.get(), c.spec, &s, &pass));
  json j = json::parse(take(s));
  emit(c, j, [](const json& j) {
    std::cout << "spec k=" << j["spec"]["k"] << " (n=" << j["spec"]["n"] << ", e=" << j["spec"]["e"] << ")\n";
    std::cout << "graph n=" << j["n"] << " e=" << j["e"] << " f=" << j["f"] << "\n";
    for (const auto& ch : j["checks"])
      std::cout << "  " << std::left << std::setw(20) << ch["name"].get<std::string>()
                << (ch["pass"].get<bool>() ? "PASS  " : "FAIL  ") << ch["detail"].get<std::string>() << "\n";
    std::cout << (j["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
  });
  return pass ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planar Turan toolkit for {K4, Theta5}-free plane graphs"};
  app.require_subcommand(1);
  Config c;
  app.add_option("--format", c.format, "Report format")->check(CLI::IsMember({"text", "json"}));

  auto input = [&](CLI::App* sub) {
    sub->add_option("--in", c.in, "Input file: embedding or graph6 ('-' for stdin)");
    sub->add_option("--outer-face", c.outer_face, "Use this face index as the outer face");
    sub->add_option("--format", c.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  };
  auto* faces = app.add_subcommand("faces", "List the faces of an embedding");
  input(faces);
  auto* decompose = app.add_subcommand("decompose", "Triangular block decomposition");
  input(decompose);
  auto* discharge = app.add_subcommand("discharge", "Discharging ledger, block certificates and bound chain");
  input(discharge);

  auto* search = app.add_subcommand("search", "Exhaustive extremal table");
  search->add_option("--family", c.family, "Family preset");
  search->add_option("--n", c.n_range, "Vertex count or range lo..hi")->required();
  search->add_option("--workers", c.workers, "Worker threads");
  search->add_option("--out", c.out, "Write witnesses as graph6 lines to this file");
  search->add_flag("--long-run", c.long_run, "Allow one vertex beyond the exhaustive bound");
  search->add_option("--format", c.format, "Report format")->check(CLI::IsMember({"text", "json"}));

  auto* construct = app.add_subcommand("construct", "Build the tight witness G_k");
  construct->add_option("--k", c.k, "Layer count")->required();
  construct->add_option("--out", c.out, "Embedding output file (stdout if omitted)");
  construct->add_option("--format", c.format, "Report format")->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "Check a candidate witness against the target size for k");
  verify->add_option("--spec", c.spec, "Layer count k of the target")->required();
  input(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*faces) return cmd_faces(c);
    if (*decompose) return cmd_decompose(c);
    if (*discharge) return cmd_discharge(c);
    if (*search) return cmd_search(c);
    if (*construct) return cmd_construct(c);
    if (*verify) return cmd_verify(c);
  } catch (const Error& e) {
    std::cerr << "ptl: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "ptl: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
