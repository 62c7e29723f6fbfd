#pragma once

// Command dispatch for the thrackle tool. Exit codes: 0 ok, 1 internal, 2 input/parse,
// 3 precondition, 4 verification negative, 5 search budget.

#include <algorithm>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "thrackle/bounds.hpp"
#include "thrackle/catalog.hpp"
#include "thrackle/io.hpp"
#include "thrackle/search.hpp"
#include "thrackle/surgery.hpp"

namespace thrackle::cli {

enum Exit { ok = 0, internal = 1, input = 2, precondition = 3, negative = 4, budget = 5 };

namespace detail {

inline std::string surface_text(const SurfaceClass& s) {
  return std::string(s.orientable ? "orientable" : "nonorientable") + " ε=" + std::to_string(s.euler_genus) + " (" +
         s.name() + ")";
}

inline void write_or_print(const Drawing& d, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-")
    out << serialize(d);
  else
    save_drawing(d, path);
}

inline void summary(const Drawing& d, std::ostream& out) {
  auto r = verify_thrackle(d);
  out << "n=" << d.graph.vertex_count() << " m=" << d.graph.edge_count() << " crossings=" << d.crossings.size();
  if (r.surface) out << " " << surface_text(*r.surface);
  out << (r.is_thrackle ? " thrackle" : " not-thrackle") << "\n";
}

inline void print_report(const BoundReport& r, std::ostream& out) {
  out << r.query << "\n";
  for (const auto& e : r.entries) {
    out << "  " << e.id << " " << (e.kind == BoundKind::upper ? "upper" : "lower") << " " << e.value;
    if (e.exact.denominator() != 1) out << " (exact " << e.exact.numerator() << "/" << e.exact.denominator() << ")";
    out << " [" << e.citation << "]\n";
  }
  auto lo = r.lower(), up = r.upper();
  out << "  best: lower " << (lo ? std::to_string(*lo) : "-") << ", upper " << (up ? std::to_string(*up) : "-") << "\n";
}

inline AbstractGraph graph_arg(const std::string& spec) {
  std::ifstream probe(spec);
  if (probe) return load_drawing(spec).graph;
  return graphs::by_name(spec);
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Thrackles on surfaces: verify, construct, bound and search."};
  app.require_subcommand(1);
  std::string data_dir = default_data_dir();
  app.add_option("--data-dir", data_dir, "directory with the shipped drawings");

  std::string file, output, kind, anchor, family, mode = "orientable", graph;
  int t = 1, g = 1, k = 0, max_pairs = 12;
  std::vector<long long> complete_n, bip, raw;
  bool bip_flag = false, nonorientable = false;

  auto* verify = app.add_subcommand("verify", "verify a drawing file");
  verify->add_option("file", file)->required();
  auto* genus = app.add_subcommand("genus", "surface of a drawing file");
  genus->add_option("file", file)->required();

  auto* catalog = app.add_subcommand("catalog", "generate a catalog drawing");
  catalog->add_option("family", family, "odd-cycle | wheel | gk | mainor | mainnon | k33_torus | k4_torus | k5_triple_torus")
      ->required();
  catalog->add_option("--k", k);
  catalog->add_option("--g", g);
  catalog->add_option("-o,--output", output);

  auto* clone = app.add_subcommand("clone", "apply a surgery");
  clone->add_option("file", file)->required();
  clone->add_option("--kind", kind, "cn_handle | clone_nonorientable | clone_orientable | clone_full | clone_full_edge")
      ->required();
  clone->add_option("--anchor", anchor, "vertex id, or edge id for cn_handle")->required();
  clone->add_option("--t", t);
  clone->add_option("-o,--output", output);

  auto* bounds = app.add_subcommand("bounds", "bound formulas");
  auto* o_complete = bounds->add_option("--complete", complete_n)->expected(1);
  auto* o_bip = bounds->add_option("--bipartite", bip)->expected(2);
  auto* o_raw = bounds->add_option("--raw", raw, "n k s t eps")->expected(5);
  auto* o_graph = bounds->add_option("--graph", graph, "builtin graph or drawing file (generic uppers)");
  bounds->add_flag("--bipartite-flag", bip_flag);
  bounds->add_flag("--nonorientable", nonorientable, "with --raw: surface is nonorientable");
  o_complete->excludes(o_bip)->excludes(o_raw)->excludes(o_graph);
  o_bip->excludes(o_raw)->excludes(o_graph);
  o_raw->excludes(o_graph);

  auto* search = app.add_subcommand("search", "exhaustive minimum-genus search");
  search->add_option("graph", graph, "builtin graph (c3..c7, k4, k5, k33, path-n, star-n) or drawing file")->required();
  search->add_option("--mode", mode)->check(CLI::IsMember({"orientable", "all"}));
  search->add_option("--budget", max_pairs);
  search->add_option("-o,--output", output, "witness file prefix");

  auto* conj = app.add_subcommand("conjecture1", "check m <= n + 2g on an orientable thrackle");
  conj->add_option("file", file)->required();
  auto* dot = app.add_subcommand("export-dot", "planarized map as Graphviz text");
  dot->add_option("file", file)->required();
  dot->add_option("-o,--output", output);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return input;
  }

  try {
    if (verify->parsed()) {
      Drawing d = load_drawing(file);
      auto r = verify_thrackle(d);
      if (r.is_thrackle) {
        out << "thrackle on " << (r.surface ? detail::surface_text(*r.surface) : "a disconnected map") << "\n";
      } else {
        out << "not a thrackle" << (r.is_generalized_thrackle ? " (generalized thrackle)" : "") << "\n";
        for (const auto& v : r.violations)
          out << "  " << d.graph.edge(v.edge_a).name << " x " << d.graph.edge(v.edge_b).name << ": " << v.observed
              << " crossings, need " << v.required << "\n";
      }
      detail::summary(d, out);
      return r.is_thrackle ? ok : negative;
    }
    if (genus->parsed()) {
      Drawing d = load_drawing(file);
      SurfaceClass s = surface_of(d);
      out << "orientable=" << (s.orientable ? "true" : "false") << " ε=" << s.euler_genus << " g=" << s.genus << "\n";
      return ok;
    }
    if (catalog->parsed()) {
      Drawing d;
      if (family == "odd-cycle") d = odd_cycle_sphere(k);
      else if (family == "wheel") d = wheel_projective(k);
      else if (family == "gk") d = gk_torus(k);
      else if (family == "mainor") d = mainor_family(g, k);
      else if (family == "mainnon") d = mainnon_family(g, k);
      else d = fixed_drawing(family, data_dir);
      detail::write_or_print(d, output, out);
      if (!output.empty() && output != "-") detail::summary(d, out);
      return ok;
    }
    if (clone->parsed()) {
      Drawing d = load_drawing(file);
      Drawing r;
      if (kind == "cn_handle") {
        int e = d.graph.edge_id(anchor);
        if (e < 0) throw std::domain_error("unknown edge '" + anchor + "'");
        r = cn_handle(d, e);
      } else {
        int u = d.graph.vertex_id(anchor);
        if (u < 0) throw std::domain_error("unknown vertex '" + anchor + "'");
        if (kind == "clone_nonorientable") r = clone_star_nonorientable(d, u, t);
        else if (kind == "clone_orientable") r = clone_star_orientable(d, u, t);
        else if (kind == "clone_full") r = clone_star_full(d, u);
        else if (kind == "clone_full_edge") r = clone_star_full_edge(d, u);
        else throw std::domain_error("unknown surgery kind '" + kind + "'");
      }
      detail::write_or_print(r, output, out);
      if (!output.empty() && output != "-") detail::summary(r, out);
      return ok;
    }
    if (bounds->parsed()) {
      if (!complete_n.empty()) {
        detail::print_report(tg_bounds_complete(complete_n[0]), out);
      } else if (!bip.empty()) {
        detail::print_report(tg_bounds_bipartite(bip[0], bip[1]), out);
      } else if (!raw.empty()) {
        long long eps = raw[4];
        bool orient = !nonorientable;
        if (eps < 0 || eps > 1000000) throw std::domain_error("Euler genus out of range");
        auto s = SurfaceClass::from_euler(orient, static_cast<int>(eps));
        detail::print_report(max_edges_thrackle(raw[0], raw[1], raw[2], raw[3], s, bip_flag, raw[1] == 1), out);
      } else if (!graph.empty()) {
        std::ifstream probe(graph);
        if (probe) {
          Drawing d = load_drawing(graph);
          auto s = surface_of(d);
          detail::print_report(s.orientable ? tg_generic_uppers(d) : tg_generic_uppers(d.graph), out);
        } else {
          detail::print_report(tg_generic_uppers(graphs::by_name(graph)), out);
        }
      } else {
        throw std::domain_error("bounds needs one of --complete, --bipartite, --raw, --graph");
      }
      return ok;
    }
    if (search->parsed()) {
      AbstractGraph gr = detail::graph_arg(graph);
      auto m = mode == "all" ? SearchMode::all : SearchMode::orientable;
      SearchResult r = min_euler_genus(gr, m, max_pairs);
      std::optional<int> best = r.min_orientable;
      if (r.min_nonorientable && (!best || *r.min_nonorientable < *best)) best = r.min_nonorientable;
      out << "min ε = " << (best ? std::to_string(*best) : "none") << ", exhausted=" << (r.exhausted ? "true" : "false")
          << "\n";
      out << "structures: " << r.count << "\n";
      out << "orientable: " << (r.min_orientable ? "min ε = " + std::to_string(*r.min_orientable) : "none") << "\n";
      if (m == SearchMode::all)
        out << "nonorientable: " << (r.min_nonorientable ? "min ε = " + std::to_string(*r.min_nonorientable) : "none")
            << "\n";
      if (!output.empty()) {
        if (r.witness_orientable) save_drawing(*r.witness_orientable, output + ".orientable.thr");
        if (r.witness_nonorientable) save_drawing(*r.witness_nonorientable, output + ".nonorientable.thr");
      }
      return ok;
    }
    if (conj->parsed()) {
      Drawing d = load_drawing(file);
      auto r = verify_thrackle(d);
      if (!r.is_thrackle) {
        out << "not a thrackle\n";
        return negative;
      }
      if (!r.surface || !r.surface->orientable)
        throw std::domain_error("conjecture check needs a connected orientable drawing");
      long long n = d.graph.vertex_count(), m = d.graph.edge_count(), gg = r.surface->genus;
      auto v = conjecture1_check(n, m, gg);
      if (v == ConjectureVerdict::violates)
        out << "violates: m=" << m << " > n+2g=" << n + 2 * gg << "\n";
      else
        out << "satisfies: m=" << m << " <= n+2g=" << n + 2 * gg << "\n";
      return ok;
    }
    if (dot->parsed()) {
      Drawing d = load_drawing(file);
      std::string text = export_dot(d);
      if (output.empty() || output == "-") {
        out << text;
      } else {
        std::ofstream f(output);
        if (!f) throw std::runtime_error("cannot write " + output);
        f << text;
      }
      return ok;
    }
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << "\n";
    return input;
  } catch (const search_budget_error& e) {
    err << e.what() << "\n";
    return budget;
  } catch (const surgery_error& e) {
    err << "internal error: " << e.what() << "\n";
    return internal;
  } catch (const std::domain_error& e) {
    err << "precondition: " << e.what() << "\n";
    return precondition;
  } catch (const std::invalid_argument& e) {
    err << "precondition: " << e.what() << "\n";
    return precondition;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return input;
  }
  return internal;
}

}  // namespace thrackle::cli
