#include "cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <sstream>

#include "yosp/character.hpp"
#include "yosp/drinfeld.hpp"
#include "yosp/hopf.hpp"
#include "yosp/osp.hpp"
#include "yosp/serialize.hpp"
#include "yosp/structure.hpp"
#include "yosp/verify.hpp"

namespace yosp::cli {

namespace {

struct UsageError : Error {
  using Error::Error;
};

struct Options {
  std::string alpha;
  std::string beta;
  std::optional<int> depth;
  std::string out_path;
  std::string in_path;
  std::vector<std::string> inputs;
  int samples = 20;
  std::uint64_t seed = 1;
  int jobs = 1;
  bool json = false;
  std::string u0 = "7";
  std::string vector;
  bool singular = false;
  int k = 0;
};

Rational flag_rational(const std::string& flag, const std::string& text) {
  if (text.empty()) throw UsageError("missing required flag " + flag);
  try {
    return parse_rational(text);
  } catch (const ParseError&) {
    throw UsageError("flag " + flag + ": '" + text + "' is not a rational number");
  }
}

std::string label_text(const BasisLabel& label) {
  std::string s;
  for (std::size_t f = 0; f < label.size(); ++f) {
    if (f) s += " (x) ";
    s += (label[f][0] == 0 && label[f][1] == 0)
             ? std::string("xi")
             : "xi_" + std::to_string(label[f][0]) + std::to_string(label[f][1]);
  }
  return s;
}

std::string vector_text(const ModuleRep& m, const Vec& v) {
  std::string s;
  for (Index k = 0; k < v.size(); ++k) {
    if (v(k) == 0) continue;
    if (!s.empty()) s += v(k) < 0 ? " - " : " + ";
    else if (v(k) < 0) s += "-";
    const Rational a = v(k) < 0 ? Rational(-v(k)) : v(k);
    if (a != 1) s += to_string(a) + "*";
    s += label_text(m.space.labels[static_cast<std::size_t>(k)]);
  }
  return s.empty() ? "0" : s;
}

ModuleRep input_module(const Options& o, std::size_t position = 0) {
  std::string path = position < o.inputs.size() ? o.inputs[position] : std::string();
  if (path.empty() && position == 0) path = o.in_path;
  if (path.empty()) throw UsageError("a module file is required (positional or --in)");
  return read_module(path);
}

void emit_module(const ModuleRep& m, const Options& o, std::ostream& out) {
  if (!o.out_path.empty()) {
    write_module(m, o.out_path);
    if (!o.json) out << "wrote " << o.out_path << " (dim " << m.dim() << ")\n";
    return;
  }
  if (o.json) {
    out << dump(to_json(m));
    return;
  }
  out << "dim " << m.dim() << (m.truncated() ? " (truncated at depth " + std::to_string(*m.depth()) + ")" : "")
      << "\n";
  try {
    const HighestWeight hw = highest_weight_of(m);
    out << "lambda1(u) = " << to_factored_string(hw.l1) << "\n";
    out << "lambda2(u) = " << to_factored_string(hw.l2) << "\n";
    out << "lambda3(u) = " << to_factored_string(hw.l3) << "\n";
  } catch (const NoHighestVector&) {
  }
  out << "c(u) = " << to_factored_string(m.c) << "\n";
}

int report_check(const CheckReport& rep, const ModuleRep& m, const Options& o, std::ostream& out) {
  if (o.json) {
    out << dump(to_json(rep, m));
  } else {
    out << rep.check << ": " << (rep.passed ? "pass" : "FAIL") << " (" << rep.samples.size()
        << " samples, grid " << rep.grid << ", degree bound " << rep.degree_bound_u
        << (rep.certified ? ", certified" : "") << ")\n";
    if (rep.witness) {
      const auto& w = *rep.witness;
      out << "witness: u = " << w.u << (rep.check == "rtt" ? ", v = " + w.v.str() : "")
          << ", entry (" << w.entry.row << "," << w.entry.col << "): " << w.entry.lhs
          << " != " << w.entry.rhs << "\n";
    }
  }
  return rep.passed ? 0 : 1;
}

int cmd_verify(const std::string& which, const Options& o, std::ostream& out) {
  const ModuleRep m = input_module(o);
  if (which == "rtt") return report_check(verify_rtt(m, o.samples, o.seed, o.jobs), m, o, out);
  if (which == "central") return report_check(verify_central(m, o.samples, o.seed), m, o, out);
  const Rational u0 = flag_rational("--u0", o.u0);
  const GaussReport g = gauss_diagonal_check(m, u0);
  if (o.json) {
    Json j;
    j["check"] = "gauss";
    j["module_digest"] = module_digest(m);
    j["u0"] = to_string(u0);
    j["ef_e"] = g.ef_e;
    j["ef_f"] = g.ef_f;
    j["hoht"] = g.hoht;
    j["cu"] = g.cu;
    j["highest"] = g.highest;
    j["result"] = g.passed() ? "pass" : "fail";
    out << dump(j);
  } else {
    auto word = [](bool b) { return b ? "pass" : "FAIL"; };
    out << "gauss at u0 = " << u0 << ": e " << word(g.ef_e) << ", f " << word(g.ef_f) << ", hoht "
        << word(g.hoht) << ", c " << word(g.cu) << ", highest " << word(g.highest) << "\n";
  }
  return g.passed() ? 0 : 1;
}

int cmd_character(const Options& o, std::ostream& out) {
  const ModuleRep m = input_module(o);
  const WeightCharacter ch = character_of(m);
  if (o.json) {
    Json j;
    Json terms = Json::array();
    for (auto it = ch.multiplicity.rbegin(); it != ch.multiplicity.rend(); ++it)
      terms.push_back({{"gamma", to_string(-it->first)}, {"mult", it->second}});
    j["terms"] = terms;
    if (ch.closed_form) {
      const int levels = m.depth() ? *m.depth() : 2 * static_cast<int>(m.dim());
      j["closed_form_matches"] = ch.matches(*ch.closed_form, levels);
    }
    out << dump(j);
    return 0;
  }
  for (auto it = ch.multiplicity.rbegin(); it != ch.multiplicity.rend(); ++it)
    out << "q^" << to_string(-it->first) << " : " << it->second << "\n";
  if (ch.closed_form) {
    const int levels = m.depth() ? *m.depth() : 2 * static_cast<int>(m.dim());
    out << "closed form " << (ch.matches(*ch.closed_form, levels) ? "matches" : "DIFFERS") << "\n";
  }
  return 0;
}

int cmd_drinfeld(const Options& o, std::ostream& out) {
  const ModuleRep m = input_module(o);
  try {
    const DrinfeldPoly p = drinfeld_polynomial(highest_weight_of(m));
    if (o.json)
      out << dump(Json{{"P", to_json(p.P)}, {"text", p.to_string()}});
    else
      out << p.to_string() << "\n";
    return 0;
  } catch (const NotDominant& e) {
    out << "no Drinfeld polynomial: " << e.what() << "\n";
    return 1;
  }
}

int cmd_irreducible(const Options& o, std::ostream& out) {
  const ModuleRep m = input_module(o);
  const IrreducibilityResult r = is_irreducible(m);
  if (o.json) {
    Json j{{"irreducible", r.irreducible}, {"singular_dim", r.singular_dim},
           {"cyclic_dim", r.cyclic_dim}, {"reason", r.reason}};
    if (r.witness) j["witness"] = to_json(*r.witness);
    out << dump(j);
  } else {
    out << (r.irreducible ? "irreducible" : "reducible") << ": " << r.reason << "\n";
    if (r.witness) out << "witness: " << vector_text(m, *r.witness) << "\n";
  }
  return r.irreducible ? 0 : 1;
}

int cmd_singular(const Options& o, std::ostream& out) {
  const ModuleRep m = input_module(o);
  const Subspace s = singular_vectors(m);
  if (o.json) {
    Json a = Json::array();
    for (Index c = 0; c < s.dim(); ++c) a.push_back(to_json(Vec(s.basis.col(c))));
    out << dump(Json{{"dim", s.dim()}, {"basis", a}});
    return 0;
  }
  out << "singular space: dim " << s.dim() << "\n";
  for (Index c = 0; c < s.dim(); ++c) out << "  " << vector_text(m, s.basis.col(c)) << "\n";
  return 0;
}

int cmd_quotient(const Options& o, std::ostream& out) {
  const ModuleRep m = input_module(o);
  Subspace k{Mat::Zero(m.dim(), 0)};
  if (!o.vector.empty()) {
    Vec v = Vec::Zero(m.dim());
    std::stringstream ss(o.vector);
    std::string item;
    Index i = 0;
    while (std::getline(ss, item, ',')) {
      if (i >= m.dim()) throw UsageError("--vector has more entries than the module dimension");
      v(i++) = flag_rational("--vector", item);
    }
    if (i != m.dim()) throw UsageError("--vector needs exactly " + std::to_string(m.dim()) + " entries");
    k = cyclic_span(m, v);
  } else if (o.singular) {
    const Subspace s = singular_vectors(m);
    Mat gens = Mat::Zero(m.dim(), 0);
    EchelonBasis<Rational> acc(m.dim());
    std::vector<Vec> cols;
    for (Index c = 0; c < s.dim(); ++c) {
      if (s.basis(m.highest_index, c) != 0) continue;
      const Subspace span = cyclic_span(m, s.basis.col(c));
      for (Index j = 0; j < span.dim(); ++j)
        if (acc.insert(span.basis.col(j))) cols.push_back(span.basis.col(j));
    }
    k.basis = Mat::Zero(m.dim(), static_cast<Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) k.basis.col(static_cast<Index>(c)) = cols[c];
  } else {
    throw UsageError("quotient needs --vector or --singular");
  }
  const ModuleRep q = quotient_module(m, k);
  if (!o.json && o.out_path.empty()) out << "submodule dim " << k.dim() << "\n";
  emit_module(q, o, out);
  return 0;
}

int cmd_osp(const Options& o, std::ostream& out) {
  const ModuleRep m = input_module(o);
  const OspAction a = osp_action(m);
  if (o.json) {
    Json d = Json::array();
    for (auto it = a.decomposition.rbegin(); it != a.decomposition.rend(); ++it)
      d.push_back({{"mu", to_string(it->first)}, {"mult", it->second}});
    out << dump(Json{{"weights_match", true}, {"decomposition", d}});
    return 0;
  }
  out << "F_11 eigenvalues match the stored weights\n";
  std::string sum;
  for (auto it = a.decomposition.rbegin(); it != a.decomposition.rend(); ++it) {
    for (Index r = 0; r < it->second; ++r) {
      if (!sum.empty()) sum += " + ";
      sum += "V(" + to_string(it->first) + ")";
    }
  }
  out << "decomposition: " << sum << "\n";
  return 0;
}

int demo_example_tpr(const Options& o, std::ostream& out) {
  const ModuleRep a = build_elementary(Rational(-1), Rational(0));
  const ModuleRep b = build_elementary(Rational(-5, 2), Rational(-3, 2));
  const ModuleRep l = tensor_modules(a, b);
  const Subspace sing = singular_vectors(l);
  Vec zeta;
  for (Index c = 0; c < sing.dim(); ++c)
    if (sing.basis(l.highest_index, c) == 0) zeta = sing.basis.col(c);
  // Coefficient 1 on xi_11 (x) xi, the last basis vector in the support.
  for (Index k = zeta.size() - 1; k >= 0; --k)
    if (zeta(k) != 0) {
      const Rational lead = zeta(k);
      zeta /= lead;
      break;
    }
  const Subspace k = cyclic_span(l, zeta);
  const HighestWeight mu = highest_weight_at(l, zeta);
  const ModuleRep q = quotient_module(l, k);
  const IrreducibilityResult irr = is_irreducible(q);
  if (o.json) {
    out << dump(Json{{"dim", l.dim()},
                     {"singular_dim", sing.dim()},
                     {"zeta", to_json(zeta)},
                     {"submodule_dim", k.dim()},
                     {"mu1", to_factored_string(mu.l1)},
                     {"mu2", to_factored_string(mu.l2)},
                     {"mu3", to_factored_string(mu.l3)},
                     {"quotient_dim", q.dim()},
                     {"quotient_irreducible", irr.irreducible}});
    return 0;
  }
  out << "L(-1,0) (x) L(-5/2,-3/2): dim " << l.dim() << "\n";
  out << "singular space: dim " << sing.dim() << "\n";
  out << "zeta = " << vector_text(l, zeta) << "\n";
  out << "submodule K generated by zeta: dim " << k.dim() << "\n";
  out << "mu1(u) = " << to_factored_string(mu.l1) << "\n";
  out << "mu2(u) = " << to_factored_string(mu.l2) << "\n";
  out << "mu3(u) = " << to_factored_string(mu.l3) << "\n";
  out << "quotient by K: dim " << q.dim() << ", " << (irr.irreducible ? "irreducible" : "reducible")
      << "\n";
  return 0;
}

int demo_closing(const Options& o, std::ostream& out) {
  const int depth = o.depth.value_or(10);
  std::vector<int> ks = o.k > 0 ? std::vector<int>{o.k} : std::vector<int>{1, 2};
  Json all = Json::array();
  bool ok = true;
  for (int k : ks) {
    const ModuleRep m = build_small_verma(Rational(-k), Rational(0), depth);
    Vec v = Vec::Zero(m.dim());
    for (Index i = 0; i < m.dim(); ++i) {
      const auto& l = m.space.labels[static_cast<std::size_t>(i)][0];
      if (l[0] == 0 && l[1] == k + 1) v(i) = 1;
    }
    const HighestWeight hw = highest_weight_at(m, v);
    const ModuleRep sub = submodule(m, cyclic_span(m, v));
    const WeightCharacter ch = character_of(sub);
    const CharacterForm form{Rational(0),
                             UniPoly::monomial(2) + UniPoly::monomial(4) - UniPoly::monomial(2 * k + 6),
                             (UniPoly(1) - UniPoly::monomial(2)) * (UniPoly(1) - UniPoly::monomial(4))};
    // Levels up to depth - 2 of M(-k) carry q-exponents up to depth - 2 - k.
    const bool match = ch.matches(form, depth - 2 - k);
    ok = ok && match;
    if (o.json) {
      all.push_back({{"k", k}, {"submodule_dim", sub.dim()}, {"lambda1", to_factored_string(hw.l1)},
                     {"lambda2", to_factored_string(hw.l2)}, {"lambda3", to_factored_string(hw.l3)},
                     {"character_matches", match}});
    } else {
      out << "k = " << k << ": span of xi_0" << k + 1 << " in M(-" << k << ") at depth " << depth
          << " has dim " << sub.dim() << "\n";
      out << "  lambda1(u) = " << to_factored_string(hw.l1) << "\n";
      out << "  lambda2(u) = " << to_factored_string(hw.l2) << "\n";
      out << "  lambda3(u) = " << to_factored_string(hw.l3) << "\n";
      out << "  character " << (match ? "matches" : "DIFFERS from")
          << " (q+q^2-q^" << k + 3 << ")/((1-q)(1-q^2)) through level " << depth - 2 << "\n";
    }
  }
  if (o.json) out << dump(all);
  return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact representations of the extended Yangian X(osp(1|2))", "yosp"};
  app.require_subcommand(1);
  Options o;

  auto add_params = [&](CLI::App* c, bool depth_required) {
    c->add_option("--alpha", o.alpha, "alpha as p/q")->required();
    c->add_option("--beta", o.beta, "beta as p/q")->required();
    auto* d = c->add_option("--depth", o.depth, "truncation depth");
    if (depth_required) d->required();
    c->add_option("--out", o.out_path, "write the module JSON here");
    c->add_flag("--json", o.json, "machine-readable output");
  };
  auto add_input = [&](CLI::App* c) {
    c->add_option("module", o.inputs, "module JSON file");
    c->add_option("--in", o.in_path, "module JSON file");
    c->add_flag("--json", o.json, "machine-readable output");
  };

  auto* elementary = app.add_subcommand("elementary", "build L(alpha, beta)");
  add_params(elementary, false);
  auto* verma = app.add_subcommand("small-verma", "build the truncated small Verma module");
  add_params(verma, true);

  auto* tensor = app.add_subcommand("tensor", "tensor product of module files");
  tensor->add_option("modules", o.inputs, "two or more module files")->required()->expected(2, -1);
  tensor->add_option("--out", o.out_path, "write the module JSON here");
  tensor->add_flag("--json", o.json, "machine-readable output");

  auto* verify = app.add_subcommand("verify", "check the defining relations");
  verify->require_subcommand(1);
  std::string which;
  for (const char* name : {"rtt", "central", "gauss"}) {
    auto* v = verify->add_subcommand(name, std::string(name) + " check");
    add_input(v);
    v->add_option("--samples", o.samples, "number of samples");
    v->add_option("--seed", o.seed, "sampling seed");
    v->add_option("--jobs", o.jobs, "worker threads");
    if (std::string(name) == "gauss") v->add_option("--u0", o.u0, "evaluation point");
    v->callback([&which, name] { which = name; });
  }

  auto* character = app.add_subcommand("character", "weight multiplicities");
  add_input(character);
  auto* drinfeld = app.add_subcommand("drinfeld", "Drinfeld polynomial of the highest weight");
  add_input(drinfeld);
  auto* classify = app.add_subcommand("classify", "is the irreducible quotient finite-dimensional");
  add_input(classify);
  auto* irreducible = app.add_subcommand("irreducible", "decide irreducibility");
  add_input(irreducible);
  auto* singular = app.add_subcommand("singular", "vectors killed by all raising coefficients");
  add_input(singular);
  auto* quotient = app.add_subcommand("quotient", "quotient by a generated submodule");
  add_input(quotient);
  quotient->add_option("--vector", o.vector, "comma-separated coordinates of a generator");
  quotient->add_flag("--singular", o.singular, "use all non-highest singular vectors");
  quotient->add_option("--out", o.out_path, "write the module JSON here");
  auto* osp = app.add_subcommand("osp", "osp(1|2) generators and decomposition");
  add_input(osp);

  auto* demo = app.add_subcommand("demo", "worked examples");
  demo->require_subcommand(1);
  auto* tpr = demo->add_subcommand("example-tpr", "a reducible tensor product of two modules");
  tpr->add_flag("--json", o.json, "machine-readable output");
  auto* closing = demo->add_subcommand("closing-example", "submodules of M(-k, 0)");
  closing->add_option("--k", o.k, "only this k");
  closing->add_option("--depth", o.depth, "truncation depth (default 10)");
  closing->add_flag("--json", o.json, "machine-readable output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (elementary->parsed()) {
      emit_module(build_elementary(flag_rational("--alpha", o.alpha), flag_rational("--beta", o.beta),
                                   o.depth),
                  o, out);
      return 0;
    }
    if (verma->parsed()) {
      emit_module(build_small_verma(flag_rational("--alpha", o.alpha), flag_rational("--beta", o.beta),
                                    *o.depth),
                  o, out);
      return 0;
    }
    if (tensor->parsed()) {
      ModuleRep acc = read_module(o.inputs.front());
      for (std::size_t i = 1; i < o.inputs.size(); ++i) acc = tensor_modules(acc, read_module(o.inputs[i]));
      emit_module(acc, o, out);
      return 0;
    }
    if (verify->parsed()) return cmd_verify(which, o, out);
    if (character->parsed()) return cmd_character(o, out);
    if (drinfeld->parsed()) return cmd_drinfeld(o, out);
    if (classify->parsed()) {
      const bool finite = classify_finite_dim(highest_weight_of(input_module(o)));
      if (o.json)
        out << dump(Json{{"finite_dimensional", finite}});
      else
        out << (finite ? "finite-dimensional" : "infinite-dimensional") << "\n";
      return 0;
    }
    if (irreducible->parsed()) return cmd_irreducible(o, out);
    if (singular->parsed()) return cmd_singular(o, out);
    if (quotient->parsed()) return cmd_quotient(o, out);
    if (osp->parsed()) return cmd_osp(o, out);
    if (tpr->parsed()) return demo_example_tpr(o, out);
    if (closing->parsed()) return demo_closing(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const MissingDepth& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace yosp::cli
