#include "qgc/cli.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qgc/bounds.hpp"
#include "qgc/coloring.hpp"
#include "qgc/io.hpp"
#include "qgc/products.hpp"

namespace qgc::cli {
namespace {

struct Context {
  std::ostream& out;
  std::ostream& err;
  double tol = kDefaultTol;
};

// "(1,1)^5 (2,2)" — consecutive equal blocks are folded.
std::string describe_blocks(const BlockAlgebra& m) {
  std::ostringstream s;
  const auto& bl = m.blocks();
  for (std::size_t i = 0; i < bl.size();) {
    std::size_t j = i;
    while (j < bl.size() && bl[j] == bl[i]) ++j;
    if (i) s << ' ';
    s << '(' << bl[i].multiplicity << ',' << bl[i].size << ')';
    if (j - i > 1) s << '^' << j - i;
    i = j;
  }
  if (!m.has_identity_conjugator()) s << " conjugated";
  return s.str();
}

std::string describe_graph(const QuantumGraph& g) {
  return "n = " + std::to_string(g.ambient_dim()) + ", dim S = " + std::to_string(g.S().dim()) +
         ", M blocks " + describe_blocks(g.M());
}

int verdict(const VerificationReport& r) { return r.passed() ? kExitOk : kExitFailed; }

void write_output(Context& ctx, const std::string& path, const std::string& text, const std::string& what) {
  if (path.empty() || path == "-") {
    ctx.out << text;
    return;
  }
  write_text_file(path, text);
  ctx.out << "wrote " << what << " to " << path << "\n";
}

std::string claim(const ColoringCertificate& c) {
  const std::string model = c.is_local() ? "loc" : "q";
  if (c.fold == 1) return "chi_" + model + "(G) <= " + std::to_string(c.colors());
  return "chi_{" + std::to_string(c.fold) + "," + model + "}(G) <= " + std::to_string(c.colors());
}

int emit_transform(Context& ctx, const TransformResult& r, const std::string& path) {
  ctx.out << r.report.to_string();
  if (!r.colour_map.empty()) {
    ctx.out << "colour map (output <- input):";
    for (std::size_t i = 0; i < r.colour_map.size(); ++i) ctx.out << ' ' << i << "<-" << r.colour_map[i];
    ctx.out << "\n";
  }
  ctx.out << "certificate: " << r.certificate.fold << "-fold, " << r.certificate.colors() << " colours, ancilla "
          << r.certificate.ancilla_dim << "\n";
  if (!path.empty()) write_output(ctx, path, dump(to_json(r.certificate)), "certificate");
  return verdict(r.report);
}

ClassicalGraph make_classical(const std::string& family, const std::vector<double>& params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw InvalidInput("graph family '" + family + "' takes " + std::to_string(k) + " parameter(s)");
  };
  auto whole = [&](std::size_t i) {
    const double x = params[i];
    if (x < 1 || x != static_cast<double>(static_cast<std::size_t>(x)))
      throw InvalidInput("parameter " + std::to_string(i + 1) + " must be a positive integer");
    return static_cast<std::size_t>(x);
  };
  if (family == "cycle") return need(1), cycle(whole(0));
  if (family == "complete") return need(1), complete(whole(0));
  if (family == "path") return need(1), path(whole(0));
  if (family == "petersen") return need(0), petersen();
  if (family == "kneser") return need(2), kneser(whole(0), whole(1));
  if (family == "random") {
    need(3);
    return random_graph(whole(0), params[1], static_cast<std::uint64_t>(params[2]));
  }
  throw InvalidInput("unknown graph family '" + family + "' (cycle, complete, path, petersen, kneser, random)");
}

std::vector<Block> parse_blocks(const std::vector<std::string>& specs) {
  std::vector<Block> blocks;
  for (const auto& s : specs) {
    const auto x = s.find('x');
    std::size_t n = 0, k = 0;
    try {
      if (x == std::string::npos) throw std::invalid_argument(s);
      n = std::stoul(s.substr(0, x));
      k = std::stoul(s.substr(x + 1));
    } catch (const std::exception&) {
      throw InvalidInput("block '" + s + "' must look like <multiplicity>x<size>, e.g. 2x2");
    }
    blocks.push_back({n, k});
  }
  return blocks;
}

Factor parse_factor(const std::string& s) {
  if (s == "first") return Factor::first;
  if (s == "second") return Factor::second;
  throw InvalidInput("factor must be 'first' or 'second'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx{out, err};
  CLI::App app{"Quantum graph products, colouring certificates and exact classical oracles", "qgc"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.add_option("--tol", ctx.tol, "Absolute/relative residual tolerance")->check(CLI::PositiveNumber);

  std::function<int()> action;
  auto bind = [&](CLI::App* sub, std::function<int()> f) { sub->callback([&action, f] { action = f; }); };

  // verify-graph
  std::string graph_path;
  auto* verify_graph = app.add_subcommand("verify-graph", "Check the quantum graph axioms");
  verify_graph->add_option("graph", graph_path, "Quantum graph JSON, classical JSON or DIMACS")->required();
  bind(verify_graph, [&] {
    const auto g = load_quantum_graph(graph_path);
    const auto r = verify_quantum_graph(g, ctx.tol);
    ctx.out << r.to_string();
    return verdict(r);
  });

  // product
  std::string kind_name, g_path, h_path, out_path;
  bool with_classical = false;
  auto* prod = app.add_subcommand("product", "Build a quantum graph product");
  prod->add_option("--kind", kind_name, "cartesian | categorical | lexicographic | strong")->required();
  prod->add_option("G", g_path, "First factor")->required();
  prod->add_option("H", h_path, "Second factor")->required();
  prod->add_option("-o,--output", out_path, "Write the product as JSON");
  prod->add_flag("--classical", with_classical, "Also run the classical identification cross-check");
  bind(prod, [&] {
    const ProductKind kind = parse_product_kind(kind_name);
    const auto g = load_quantum_graph(g_path);
    const auto h = load_quantum_graph(h_path);
    const auto k = product(g, h, kind, ctx.tol);
    ctx.out << to_string(kind) << " product: " << describe_graph(k) << "\n";
    if (kind == ProductKind::lexicographic) ctx.out << kLexicographicNotice << "\n";
    auto report = verify_quantum_graph(k, ctx.tol);
    ctx.out << report.to_string();
    int code = verdict(report);
    if (with_classical) {
      const auto cr = classical_crosscheck(load_classical_graph(g_path), load_classical_graph(h_path), kind, ctx.tol);
      ctx.out << cr.to_string();
      code = std::max(code, verdict(cr));
    }
    if (!out_path.empty()) write_output(ctx, out_path, dump(to_json(k)), "product");
    return code;
  });

  // color
  auto* color = app.add_subcommand("color", "Colouring certificates");
  color->require_subcommand(1);
  std::string cert_path, cert2_path, hcert_path, model = "auto";
  bool bfold = false;
  auto* cverify = color->add_subcommand("verify", "Verify a colouring certificate");
  cverify->add_option("graph", graph_path)->required();
  cverify->add_option("cert", cert_path)->required();
  cverify->add_flag("--bfold", bfold, "Use the b-fold verifier");
  cverify->add_option("--model", model, "auto | loc | q | qa | qc");
  bind(cverify, [&] {
    if (model == "qa" || model == "qc")
      throw InvalidInput("model '" + model + "' is not certifiable from finite data; only loc and q are supported");
    if (model != "auto" && model != "loc" && model != "q") throw InvalidInput("unknown model '" + model + "'");
    const auto g = load_quantum_graph(graph_path);
    const auto c = load_certificate(cert_path);
    if (model == "loc" && !c.is_local())
      throw InvalidInput("certificate has ancilla dimension " + std::to_string(c.ancilla_dim) + ", not a local strategy");
    if (!bfold && c.fold != 1) throw InvalidInput("certificate has fold " + std::to_string(c.fold) + "; pass --bfold");
    const auto r = bfold ? verify_bfold(g, c, ctx.tol) : verify_coloring(g, c, ctx.tol);
    ctx.out << r.to_string();
    if (r.passed()) ctx.out << "certifies " << claim(c) << "\n";
    return verdict(r);
  });

  auto* transform = color->add_subcommand("transform", "Constructive colouring transformations");
  transform->require_subcommand(1);
  std::size_t fold_b = 2;
  auto add_out = [&](CLI::App* s) { s->add_option("-o,--output", out_path, "Write the certificate as JSON"); };

  auto* reduce = transform->add_subcommand("reduce", "b-fold -> (b-1)-fold");
  reduce->add_option("graph", graph_path)->required();
  reduce->add_option("cert", cert_path)->required();
  add_out(reduce);
  bind(reduce, [&] {
    return emit_transform(ctx, reduce_bfold(load_quantum_graph(graph_path), load_certificate(cert_path), ctx.tol),
                          out_path);
  });

  auto* combine = transform->add_subcommand("combine", "(b1,c) + (b2,d) -> (b1+b2, c+d)");
  combine->add_option("graph", graph_path)->required();
  combine->add_option("cert1", cert_path)->required();
  combine->add_option("cert2", cert2_path)->required();
  add_out(combine);
  bind(combine, [&] {
    return emit_transform(ctx,
                          combine_bfold(load_quantum_graph(graph_path), load_certificate(cert_path),
                                        load_certificate(cert2_path), ctx.tol),
                          out_path);
  });

  auto* scale = transform->add_subcommand("scale", "1-fold c-colouring -> b-fold bc-colouring");
  scale->add_option("graph", graph_path)->required();
  scale->add_option("cert", cert_path)->required();
  scale->add_option("-b,--fold", fold_b, "Target fold")->check(CLI::PositiveNumber);
  add_out(scale);
  bind(scale, [&] {
    return emit_transform(
        ctx, scale_bfold(load_quantum_graph(graph_path), load_certificate(cert_path), fold_b, ctx.tol), out_path);
  });

  auto* lex = transform->add_subcommand("lex", "b-fold colouring of G + b-colouring of H -> colouring of G[H]");
  lex->add_option("G", g_path)->required();
  lex->add_option("cert_g", cert_path)->required();
  lex->add_option("H", h_path)->required();
  lex->add_option("cert_h", hcert_path)->required();
  add_out(lex);
  bind(lex, [&] {
    ctx.out << kLexicographicNotice << "\n";
    return emit_transform(ctx,
                          lexicographic_coloring(load_quantum_graph(g_path), load_certificate(cert_path),
                                                 load_quantum_graph(h_path), load_certificate(hcert_path), ctx.tol),
                          out_path);
  });

  auto* strong_lift = transform->add_subcommand("strong-lift", "Colourings of G and H -> colouring of G [x] H");
  strong_lift->add_option("G", g_path)->required();
  strong_lift->add_option("cert_g", cert_path)->required();
  strong_lift->add_option("H", h_path)->required();
  strong_lift->add_option("cert_h", hcert_path)->required();
  add_out(strong_lift);
  bind(strong_lift, [&] {
    return emit_transform(ctx,
                          strong_coloring(load_quantum_graph(g_path), load_certificate(cert_path),
                                          load_quantum_graph(h_path), load_certificate(hcert_path), ctx.tol),
                          out_path);
  });

  auto* cat_lift = transform->add_subcommand("cat-lift", "Colouring of G -> colouring of G x H");
  cat_lift->add_option("G", g_path)->required();
  cat_lift->add_option("cert_g", cert_path)->required();
  cat_lift->add_option("H", h_path)->required();
  add_out(cat_lift);
  bind(cat_lift, [&] {
    return emit_transform(
        ctx, categorical_lift(load_quantum_graph(g_path), load_certificate(cert_path), load_quantum_graph(h_path), ctx.tol),
        out_path);
  });

  std::size_t bell_n = 2;
  auto* bell = color->add_subcommand("bell", "Bell-basis colouring of the complete graph over M_n");
  bell->add_option("n", bell_n)->required()->check(CLI::PositiveNumber);
  add_out(bell);
  bind(bell, [&] {
    const auto c = bell_coloring(bell_n);
    ctx.out << "bell colouring: " << c.colors() << " colours, ancilla " << c.ancilla_dim << "\n";
    if (!out_path.empty()) write_output(ctx, out_path, dump(to_json(c)), "certificate");
    return kExitOk;
  });

  auto* extract = color->add_subcommand("extract", "Lower-bound extraction on a single-block complete graph");
  extract->add_option("graph", graph_path)->required();
  extract->add_option("cert", cert_path)->required();
  bind(extract, [&] {
    const auto r = complete_lower_bound_extract(load_quantum_graph(graph_path), load_certificate(cert_path), ctx.tol);
    ctx.out << r.to_string();
    return verdict(r);
  });

  // classical
  auto* classical = app.add_subcommand("classical", "Exact classical oracles");
  classical->require_subcommand(1);
  std::string format = "json";
  auto* chi = classical->add_subcommand("chi", "Chromatic number");
  chi->add_option("graph", graph_path)->required();
  bind(chi, [&] {
    const auto g = load_classical_graph(graph_path);
    ctx.out << "chi = " << chromatic_exact(g) << "\n";
    return kExitOk;
  });

  std::string witness_path;
  auto* chib = classical->add_subcommand("chi-b", "b-fold chromatic number with witness");
  chib->add_option("graph", graph_path)->required();
  chib->add_option("-b,--fold", fold_b, "Fold")->check(CLI::PositiveNumber);
  chib->add_option("--cert", witness_path, "Write the witness as a local certificate");
  bind(chib, [&] {
    const auto g = load_classical_graph(graph_path);
    const auto res = bfold_exact(g, fold_b);
    ctx.out << "chi_" << fold_b << " = " << res.colours << "\n";
    ctx.out << "witness:";
    for (std::size_t v = 0; v < res.witness.colours.size(); ++v) {
      ctx.out << ' ' << v << ":{";
      for (std::size_t i = 0; i < res.witness.colours[v].size(); ++i)
        ctx.out << (i ? "," : "") << res.witness.colours[v][i];
      ctx.out << '}';
    }
    ctx.out << "\n";
    if (!witness_path.empty()) write_output(ctx, witness_path, dump(to_json(to_local_cert(g, res.witness))), "certificate");
    return kExitOk;
  });

  auto* cprod = classical->add_subcommand("product", "Classical graph product");
  cprod->add_option("--kind", kind_name)->required();
  cprod->add_option("G", g_path)->required();
  cprod->add_option("H", h_path)->required();
  cprod->add_option("-o,--output", out_path);
  cprod->add_option("--format", format, "json | dimacs");
  bind(cprod, [&] {
    const auto k = classical_product(load_classical_graph(g_path), load_classical_graph(h_path),
                                     parse_product_kind(kind_name));
    std::string text;
    if (format == "dimacs") {
      std::ostringstream s;
      write_dimacs(s, k);
      text = s.str();
    } else if (format == "json") {
      text = dump(to_json(k));
    } else {
      throw InvalidInput("format must be json or dimacs");
    }
    if (out_path.empty()) {
      ctx.out << kind_name << " product: " << k.vertex_count() << " vertices, " << k.edge_count() << " edges\n";
      ctx.out << text;
    } else {
      write_output(ctx, out_path, text, "product");
    }
    return kExitOk;
  });

  std::size_t kc = 5, kb = 2;
  std::string check_path;
  auto* kn = classical->add_subcommand("kneser", "Kneser graph K(c,b), or a homomorphism test into it");
  kn->add_option("c", kc)->required()->check(CLI::PositiveNumber);
  kn->add_option("b", kb)->required()->check(CLI::PositiveNumber);
  kn->add_option("--check", check_path, "Decide whether this graph maps into K(c,b)");
  kn->add_option("-o,--output", out_path);
  bind(kn, [&] {
    if (!check_path.empty()) {
      const bool ok = kneser_hom_check(load_classical_graph(check_path), kc, kb);
      ctx.out << "homomorphism into K(" << kc << "," << kb << "): " << (ok ? "exists" : "none") << "\n";
      return kExitOk;
    }
    const auto k = kneser(kc, kb);
    ctx.out << "K(" << kc << "," << kb << "): " << k.vertex_count() << " vertices, " << k.edge_count() << " edges\n";
    if (!out_path.empty()) write_output(ctx, out_path, dump(to_json(k)), "graph");
    return kExitOk;
  });

  // report
  auto* report = app.add_subcommand("report", "Inequality reports");
  report->require_subcommand(1);
  std::string json_path;
  auto* rbounds = report->add_subcommand("bounds", "Chromatic bounds for the four products of two classical graphs");
  rbounds->add_option("G", g_path)->required();
  rbounds->add_option("H", h_path)->required();
  rbounds->add_option("--json", json_path, "Write the JSON report (- for stdout)");
  bind(rbounds, [&] {
    const auto r = bounds_report(load_classical_graph(g_path), load_classical_graph(h_path));
    ctx.out << r.table();
    if (!json_path.empty()) write_output(ctx, json_path, dump(r.to_json()), "report");
    return r.all_hold() ? kExitOk : kExitFailed;
  });

  // hom
  auto* hom = app.add_subcommand("hom", "Quantum graph homomorphisms");
  hom->require_subcommand(1);
  std::string dst_path;
  auto* hverify = hom->add_subcommand("verify", "Verify a Kraus family src -> dst");
  hverify->add_option("src", g_path)->required();
  hverify->add_option("dst", dst_path)->required();
  hverify->add_option("cert", cert_path)->required();
  bind(hverify, [&] {
    const auto r =
        verify_homomorphism(load_quantum_graph(g_path), load_quantum_graph(dst_path), load_homomorphism(cert_path), ctx.tol);
    ctx.out << r.to_string();
    return verdict(r);
  });

  std::string witness_kind, factor_name = "first";
  auto* hwit = hom->add_subcommand("witness", "Sabidussi (factor -> G [] H) or Hedetniemi (G x H -> factor) witness");
  hwit->add_option("kind", witness_kind, "sabidussi | hedetniemi")->required();
  hwit->add_option("G", g_path)->required();
  hwit->add_option("H", h_path)->required();
  hwit->add_option("--factor", factor_name, "first | second");
  add_out(hwit);
  bind(hwit, [&] {
    const auto g = load_quantum_graph(g_path);
    const auto h = load_quantum_graph(h_path);
    const Factor f = parse_factor(factor_name);
    const QuantumGraph& single = f == Factor::first ? g : h;
    VerificationReport r;
    HomomorphismCertificate cert;
    if (witness_kind == "sabidussi") {
      cert = sabidussi_witness(g, h, f);
      r = verify_homomorphism(single, cartesian(g, h, ctx.tol), cert, ctx.tol);
    } else if (witness_kind == "hedetniemi") {
      cert = hedetniemi_witness(g, h, f);
      r = verify_homomorphism(categorical(g, h, ctx.tol), single, cert, ctx.tol);
    } else {
      throw InvalidInput("witness kind must be sabidussi or hedetniemi");
    }
    ctx.out << r.to_string();
    if (!out_path.empty()) write_output(ctx, out_path, dump(to_json(cert)), "homomorphism");
    return verdict(r);
  });

  // make
  auto* make = app.add_subcommand("make", "Generate input files");
  make->require_subcommand(1);
  std::string family;
  std::vector<double> params;
  bool embed = false;
  auto* mgraph = make->add_subcommand("graph", "Classical graph: cycle N | complete N | path N | petersen | kneser C B | random N P SEED");
  mgraph->add_option("family", family)->required();
  mgraph->add_option("params", params);
  mgraph->add_option("--format", format, "json | dimacs");
  mgraph->add_flag("--quantum", embed, "Emit the embedded quantum graph instead");
  add_out(mgraph);
  bind(mgraph, [&] {
    const auto g = make_classical(family, params);
    std::string text;
    if (embed) {
      text = dump(to_json(from_classical(g)));
    } else if (format == "dimacs") {
      std::ostringstream s;
      write_dimacs(s, g);
      text = s.str();
    } else if (format == "json") {
      text = dump(to_json(g));
    } else {
      throw InvalidInput("format must be json or dimacs");
    }
    write_output(ctx, out_path, text, "graph");
    return kExitOk;
  });

  std::vector<std::string> block_specs;
  auto* mcomplete = make->add_subcommand("complete", "Complete quantum graph over a block algebra");
  mcomplete->add_option("blocks", block_specs, "Blocks as <multiplicity>x<size>, e.g. 1x2 or 2x2")->required();
  add_out(mcomplete);
  bind(mcomplete, [&] {
    const auto g = complete_quantum_graph(BlockAlgebra(parse_blocks(block_specs)));
    write_output(ctx, out_path, dump(to_json(g)), "graph");
    return kExitOk;
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << "qgc 1.0\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (!action) {
      err << "error: no command given\n";
      return kExitUsage;
    }
    return action();
  } catch (const ConstructionError& e) {
    out << e.report().to_string();
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  } catch (const SizeGuardError& e) {
    err << "error: " << e.what() << "\n";
    return kExitTooLarge;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace qgc::cli
