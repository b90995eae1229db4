// pcf: command-line front end for the PCF coloring toolkit.
//
// Exit codes: 0 success, 1 domain error (bad input, failed precondition,
// hypothesis violation, verification failure), 2 usage error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pcf/pcf.hpp"

namespace {

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path == "-") return pcf::read_all(std::cin);
  if (!std::filesystem::is_regular_file(path)) throw usage_error("cannot read '" + path + "'");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw usage_error("cannot open '" + path + "'");
  return pcf::read_all(in);
}

std::string ids(const pcf::vertex_set& s) {
  std::string out;
  for (pcf::vertex v : s) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

int to_int(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw usage_error(std::string("bad ") + what + " '" + text + "'");
}

struct input_opts {
  std::string path = "-";
  bool planar = false;
};

// Reads either an edge list or a rotation system.
struct loaded {
  pcf::graph g;
  std::optional<pcf::plane_graph> pg;
};

loaded load(const input_opts& in) {
  auto text = slurp(in.path);
  if (in.planar) {
    auto pg = pcf::parse_plane_graph(text);
    auto g = pg.underlying();
    return {std::move(g), std::move(pg)};
  }
  return {pcf::parse_graph(text), std::nullopt};
}

int cmd_mad(const input_opts& in) {
  auto m = pcf::mad_exact(load(in).g);
  std::cout << pcf::to_string(m.value) << '\n';
  std::cout << "witness " << ids(m.witness) << '\n';
  return 0;
}

int cmd_chi(const input_opts& in, unsigned threads, std::size_t max_vertices) {
  pcf::exact_options opt;
  opt.threads = threads;
  opt.max_vertices = max_vertices;
  std::cout << pcf::chi_pcf_exact(load(in).g, opt) << '\n';
  return 0;
}

int cmd_color(const input_opts& in, int colors, bool check, bool exact_fallback,
              const std::string& trace_path) {
  auto l = load(in);
  pcf::color_options opt;
  opt.check_hypotheses = check;
  opt.exact_fallback = exact_fallback;
  pcf::color_result res = [&] {
    if (l.pg) {
      if (colors != 7) throw usage_error("--planar needs --colors 7");
      if (check) throw usage_error("--check applies to the sparse theorems only");
      return pcf::color_planar7(*l.pg, opt);
    }
    return pcf::color(l.g, colors, opt);
  }();
  if (auto bad = pcf::verify_pcf(l.g, res.phi)) {
    throw pcf::extension_failed("color/verify", bad->describe());
  }
  if (!trace_path.empty()) {
    std::ofstream out(trace_path, std::ios::binary);
    if (!out) throw usage_error("cannot write '" + trace_path + "'");
    out << res.trace.to_json_lines();
  }
  std::cout << pcf::emit_coloring(res.phi);
  return 0;
}

int cmd_verify(const input_opts& in, int colors, const std::string& coloring_path) {
  if (in.path == "-" && coloring_path == "-") throw usage_error("only one input may be stdin");
  auto l = load(in);
  auto phi = pcf::parse_coloring(slurp(coloring_path), colors);
  if (auto bad = pcf::verify_pcf(l.g, phi)) {
    std::cout << "VIOLATION " << bad->describe() << '\n';
    return 1;
  }
  std::cout << "OK\n";
  return 0;
}

int cmd_find_config(const input_opts& in, int colors) {
  auto l = load(in);
  std::optional<pcf::config> cfg;
  if (l.pg) {
    cfg = pcf::find_config(l.g, colors, pcf::reduce_mode::planar7, &*l.pg);
  } else {
    cfg = pcf::find_config(l.g, colors);
  }
  std::cout << (cfg ? cfg->describe() : std::string("NONE")) << '\n';
  return 0;
}

int cmd_discharge(const input_opts& in, const std::string& rules) {
  auto rs = pcf::rule_set::parse(rules);
  auto l = load(in);
  if (l.pg) {
    std::cout << pcf::run(*l.pg, rs).to_lines() << pcf::audit(*l.pg, rs).to_lines();
  } else {
    std::cout << pcf::run(l.g, rs).to_lines() << pcf::audit(l.g, rs).to_lines();
  }
  return 0;
}

int cmd_generate(const std::string& family, const std::vector<std::string>& params,
                 std::uint64_t seed, bool planar) {
  auto need = [&](std::size_t n) {
    if (params.size() != n) {
      throw usage_error(family + " takes " + std::to_string(n) + " parameter(s)");
    }
  };
  auto p = [&](std::size_t i) { return to_int(params.at(i), "parameter"); };
  auto emit_plane = [&](const pcf::plane_graph& pg) {
    std::cout << (planar ? pcf::emit_plane_graph(pg) : pcf::emit_graph(pg.underlying()));
    return 0;
  };
  auto emit = [&](const pcf::graph& g) {
    if (planar) throw usage_error(family + " has no embedding");
    std::cout << pcf::emit_graph(g);
    return 0;
  };

  if (family == "cycle") {
    need(1);
    return emit_plane(pcf::gen::cycle_plane(p(0)));
  }
  if (family == "dodecahedron") {
    need(0);
    return emit_plane(pcf::gen::dodecahedron_plane());
  }
  if (family == "subdivided-dodecahedron") {
    need(0);
    return emit_plane(pcf::gen::one_subdivision(pcf::gen::dodecahedron_plane()));
  }
  if (family == "outerplanar") {
    need(2);
    return emit_plane(pcf::gen::random_outerplanar(p(0), p(1), seed));
  }
  if (family == "path") {
    need(1);
    return emit(pcf::gen::path(p(0)));
  }
  if (family == "complete") {
    need(1);
    return emit(pcf::gen::complete(p(0)));
  }
  if (family == "kstar") {
    need(1);
    return emit(pcf::gen::kstar(p(0)));
  }
  if (family == "random-tree") {
    need(1);
    return emit(pcf::gen::random_tree(p(0), seed));
  }
  if (family == "random-regular") {
    need(2);
    return emit(pcf::gen::random_regular(p(0), p(1), seed));
  }
  if (family == "random-sparse") {
    if (params.size() != 2 && params.size() != 3) {
      throw usage_error("random-sparse takes n, a mad cap p/q and optionally m");
    }
    std::optional<std::size_t> m;
    if (params.size() == 3) m = static_cast<std::size_t>(p(2));
    pcf::rational cap;
    try {
      cap = pcf::parse_rational(params[1]);
    } catch (const pcf::error&) {
      throw usage_error("bad mad cap '" + params[1] + "'");
    }
    return emit(pcf::gen::random_sparse(p(0), cap, seed, m));
  }
  throw usage_error("unknown family '" + family + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proper conflict-free coloring toolkit"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  input_opts in;
  int colors = 0;
  bool check = false;
  bool exact_fallback = false;
  std::string trace_path;
  std::string coloring_path;
  std::string rules;
  unsigned threads = 1;
  std::size_t max_vertices = 24;
  std::string family;
  std::vector<std::string> params;
  std::uint64_t seed = 1;

  auto add_input = [&](CLI::App* sub, bool planar_flag) {
    sub->add_option("graph", in.path, "Graph file, '-' for stdin")->required();
    if (planar_flag) sub->add_flag("--planar", in.planar, "Input is a rotation system");
  };

  auto* mad = app.add_subcommand("mad", "Maximum average degree as p/q with a witness");
  add_input(mad, false);

  auto* chi = app.add_subcommand("chi-pcf", "Exact PCF chromatic number");
  add_input(chi, false);
  chi->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));
  chi->add_option("--max-vertices", max_vertices, "Refuse larger inputs");

  auto* col = app.add_subcommand("color", "PCF coloring by reducible configurations");
  add_input(col, true);
  col->add_option("--colors", colors, "Palette size")->required()->check(CLI::Range(4, 1 << 20));
  col->add_flag("--check", check, "Check the theorem hypotheses first");
  col->add_flag("--exact-fallback", exact_fallback, "Solve stuck components exactly");
  col->add_option("--trace", trace_path, "Write the reduction trace (JSON lines)");

  auto* ver = app.add_subcommand("verify", "Check a coloring file");
  add_input(ver, true);
  ver->add_option("coloring", coloring_path, "Coloring file, '-' for stdin")->required();
  ver->add_option("--colors", colors, "Palette size")->required()->check(CLI::Range(1, 1 << 20));

  auto* gen = app.add_subcommand("generate", "Print a generated graph");
  gen->add_option("family", family, "Graph family")->required();
  gen->add_option("params", params, "Family parameters");
  gen->add_option("--seed", seed, "Random seed");
  gen->add_flag("--planar", in.planar, "Print a rotation system");

  auto* dis = app.add_subcommand("discharge", "Charge ledger and audit");
  add_input(dis, true);
  dis->add_option("--rules", rules, "c4, c5, c6:<c> or planar5")->required();

  auto* find = app.add_subcommand("find-config", "First applicable reducible configuration");
  add_input(find, true);
  find->add_option("--colors", colors, "Palette size")->required()->check(CLI::Range(4, 1 << 20));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (mad->parsed()) return cmd_mad(in);
    if (chi->parsed()) return cmd_chi(in, threads, max_vertices);
    if (col->parsed()) return cmd_color(in, colors, check, exact_fallback, trace_path);
    if (ver->parsed()) return cmd_verify(in, colors, coloring_path);
    if (gen->parsed()) return cmd_generate(family, params, seed, in.planar);
    if (dis->parsed()) return cmd_discharge(in, rules);
    if (find->parsed()) {
      if (in.planar && colors != 7) throw usage_error("--planar needs --colors 7");
      return cmd_find_config(in, colors);
    }
  } catch (const usage_error& e) {
    std::cerr << "pcf: " << e.what() << '\n';
    return 2;
  } catch (const pcf::error& e) {
    std::cerr << "pcf: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "pcf: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
