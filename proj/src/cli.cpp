#include "tdual/cli.hpp"

#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "tdual/characters.hpp"
#include "tdual/divisor_calc.hpp"
#include "tdual/grcomb.hpp"
#include "tdual/io.hpp"

namespace tdual::cli {

IntVector parse_vector(const std::string& text) {
  IntVector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::string t;
    for (char c : item)
      if (c != ' ' && c != '(' && c != ')') t += c;
    if (t.empty()) throw UsageError("malformed vector: " + text);
    if (t[0] == '+') t = t.substr(1);
    Int x;
    if (x.set_str(t, 10) != 0) throw UsageError("malformed integer '" + t + "' in " + text);
    out.push_back(x);
  }
  if (out.empty()) throw UsageError("empty vector");
  return out;
}

RatMatrix parse_rat_matrix(const std::string& text) {
  std::vector<RatVector> rows;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line, ';')) {
    RatVector row;
    std::stringstream ls(line);
    std::string item;
    while (std::getline(ls, item, ',')) {
      std::string t;
      for (char c : item)
        if (c != ' ') t += c;
      if (!t.empty() && t[0] == '+') t = t.substr(1);
      Rat x;
      if (t.empty() || x.set_str(t, 10) != 0 || x.get_den() == 0) throw UsageError("malformed rational '" + t + "'");
      x.canonicalize();
      row.push_back(x);
    }
    rows.push_back(row);
  }
  return RatMatrix::from_rows(rows);
}

IntMatrix minimal_killing(const RootDatum& rd) {
  IntMatrix out(rd.rank, rd.rank);
  const std::size_t count = components(rd).size();
  for (std::size_t c = 0; c < count; ++c) {
    IntMatrix k = killing_matrix(rd, c);
    Int g = 0;
    for (std::size_t i = 0; i < rd.rank; ++i)
      for (std::size_t j = 0; j < rd.rank; ++j) {
        Int e = i == j ? Int(k(i, j) / 2) : k(i, j);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
      }
    for (std::size_t i = 0; i < rd.rank; ++i)
      for (std::size_t j = 0; j < rd.rank; ++j) out(i, j) += k(i, j) / g;
  }
  return out;
}

QForm exponent_qform(const RootDatum& rd, const Exponent& e) {
  RatMatrix k = to_rational(minimal_killing(rd));
  // The rational part is taken literally (not reduced mod 1) through the
  // parsed value, which already lies in [0, 1).
  return qform_from_gram(rd, e.rational() * k, e.transcendental() * k);
}

std::string lattice_string(const Sublattice& s) {
  if (s.ambient_rank() == 1) {
    if (s.rank() == 0) return "0";
    const Int& g = s.basis()(0, 0);
    return g == 1 ? "Z" : g.get_str() + "Z";
  }
  return s.to_string();
}

namespace {

struct Options {
  std::string group, datum, form, q_exp, gram, mode = "full", out_path;
  std::string scale = "1", f_values, a, b, highest, lattice = "Z";
  std::string r0, p;
  long d = 0, n = 0, l = 0, component = -1, samples = 50, bound = 5;
  unsigned seed = 1;
  bool json = false;
  std::string left_kind, right_kind;
};

RootDatum load_group(const Options& o) {
  if (!o.datum.empty() && !o.group.empty()) throw UsageError("give only one of --group and --datum");
  if (!o.datum.empty()) return io::load_root_datum(o.datum);
  if (!o.group.empty()) return standard(o.group);
  throw UsageError("one of --group or --datum is required");
}

QForm load_form(const RootDatum& rd, const Options& o) {
  int given = !o.form.empty() + !o.q_exp.empty() + !o.gram.empty();
  if (given > 1) throw UsageError("give only one of --form, --q-exp and --gram");
  if (!o.form.empty()) return io::load_qform(o.form, &rd);
  if (!o.q_exp.empty()) return exponent_qform(rd, Exponent::parse(o.q_exp));
  if (!o.gram.empty()) return qform_from_gram(rd, parse_rat_matrix(o.gram));
  return trivial_qform(rd);
}

// A form file names its own datum, so --group may be omitted alongside --form.
RootDatum load_group_or_form_datum(const Options& o) {
  if (o.group.empty() && o.datum.empty() && !o.form.empty()) return io::load_qform(o.form, nullptr).datum();
  return load_group(o);
}

KernelMode parse_mode(const std::string& m) {
  if (m == "full") return KernelMode::full;
  if (m == "coroot") return KernelMode::coroot;
  throw UsageError("--mode must be full or coroot");
}

std::string label(const RootDatum& rd) { return rd.name.empty() ? cartan_type(rd) : rd.name; }

std::string multipliers_string(const TwistedDual& td) {
  std::string s = "[";
  for (std::size_t i = 0; i < td.multipliers.size(); ++i) {
    if (i) s += ",";
    s += td.multipliers[i] ? td.multipliers[i]->get_str() : "inf";
  }
  return s + "]";
}

std::string index_list(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i] + 1);
  return s + "]";
}

void print_dual(std::ostream& out, const TwistedDual& td) {
  out << "source: " << label(td.source) << " " << describe(td.source) << "\n";
  out << "weight lattice: " << lattice_string(td.weight_sublattice) << "\n";
  out << "multipliers: " << multipliers_string(td) << "\n";
  out << "dropped: " << index_list(td.dropped) << "\n";
  out << "dual simple roots: " << to_string(td.datum.simple_roots) << "\n";
  out << "dual simple coroots: " << to_string(td.datum.simple_coroots) << "\n";
  out << "dual type: " << describe(td.datum) << "\n";
}

void emit_dual(std::ostream& out, const TwistedDual& td, const Options& o) {
  if (!o.out_path.empty()) io::save(o.out_path, io::twisted_dual_to_json(td));
  if (o.json)
    out << io::twisted_dual_to_json(td).dump(2) << "\n";
  else
    print_dual(out, td);
}

std::vector<Int> f_values(const RootDatum& rd, const Options& o) {
  if (o.f_values.empty()) return standard_f(rd);
  IntVector v = parse_vector(o.f_values);
  return std::vector<Int>(v.begin(), v.end());
}

RootDatum compare_side(const std::string& kind, const RootDatum& rd, const Options& o) {
  if (kind.rfind("file:", 0) == 0) return io::load_root_datum(kind.substr(5));
  if (kind == "source") return rd;
  if (kind == "langlands") return langlands_dual(rd);
  if (kind == "fl") {
    if (o.d <= 0 || o.n <= 0) throw UsageError("fl needs --d and --N");
    return fl_dual(rd, o.d, o.n).datum;
  }
  if (kind == "lusztig") {
    if (o.l <= 0) throw UsageError("lusztig needs --l");
    return lusztig_dual(cartan_datum(rd, f_values(rd, o)), o.l).datum;
  }
  if (kind == "twisted") {
    if (o.d > 0 || o.n > 0) {
      if (o.d <= 0 || o.n <= 0) throw UsageError("give both --d and --N");
      return twisted_dual(fl_qform(rd, o.d, o.n), KernelMode::full).datum;
    }
    if (o.l > 0) return twisted_dual(lusztig_qform(cartan_datum(rd, f_values(rd, o)), o.l), KernelMode::coroot).datum;
    return twisted_dual(load_form(rd, o), parse_mode(o.mode)).datum;
  }
  throw UsageError("unknown comparison side '" + kind + "' (fl, twisted, lusztig, langlands, source, file:PATH)");
}

std::string permutation_string(const std::vector<std::size_t>& p) { return index_list(p); }

int cmd_compare(std::ostream& out, const Options& o) {
  RootDatum rd = (o.group.empty() && o.datum.empty() && o.form.empty()) ? RootDatum() : load_group_or_form_datum(o);
  RootDatum left = compare_side(o.left_kind, rd, o);
  RootDatum right = compare_side(o.right_kind, rd, o);
  IsoResult r = isomorphic(left, right);
  switch (r.status) {
    case IsoStatus::iso:
      out << "AGREE\n";
      out << "witness map: " << to_string(r.map) << "\n";
      out << "root permutation: " << permutation_string(r.permutation) << "\n";
      break;
    case IsoStatus::none:
      out << "DISAGREE\nfirst mismatch: " << r.reason << "\n";
      break;
    case IsoStatus::undecided:
      out << "UNDECIDED\nreason: " << r.reason << "\n";
      break;
  }
  return kOk;
}

int cmd_quantum(std::ostream& out, const Options& o) {
  RootDatum rd = load_group(o);
  RatMatrix b;
  if (!o.gram.empty()) {
    b = parse_rat_matrix(o.gram);
  } else {
    Rat s;
    if (s.set_str(o.scale, 10) != 0 || s.get_den() == 0) throw UsageError("malformed --scale " + o.scale);
    s.canonicalize();
    b = s * normalized_killing(rd);
  }
  QuantumPair qp = quantum_dual_pair(rd, b);
  out << "b: " << to_string(b) << "\n";
  out << "[left]\n";
  print_dual(out, qp.left);
  out << "[right]\n";
  print_dual(out, qp.right);
  out << "iso: " << to_string(qp.iso) << "\n";
  out << "verified: " << (qp.verified ? "yes" : "no") << "\n";
  if (!qp.verified) out << "reason: " << qp.report << "\n";
  return qp.verified ? kOk : kDomainError;
}

int cmd_incidence(std::ostream& out, const Options& o) {
  std::size_t rank = 1;
  if (o.lattice != "Z") {
    if (o.lattice.rfind("Z^", 0) != 0) throw UsageError("--lattice must be Z or Z^r");
    rank = std::stoul(o.lattice.substr(2));
  }
  auto parse_component = [&](const std::string& text) {
    ComponentIndex c;
    if (rank == 1) {
      for (const auto& x : parse_vector(text)) c.push_back({x});
    } else {
      std::stringstream ss(text);
      std::string item;
      while (std::getline(ss, item, ';')) {
        IntVector v = parse_vector(item);
        if (v.size() != rank) throw UsageError("coweight " + item + " does not have rank " + std::to_string(rank));
        c.push_back(v);
      }
    }
    return c;
  };
  if (o.a.empty() || o.b.empty()) throw UsageError("incidence needs --a and --b");
  ComponentIndex a = parse_component(o.a), b = parse_component(o.b);
  if (a.size() != b.size()) throw UsageError("--a and --b have different numbers of coordinates");
  auto p = incident(a, b);
  if (p)
    out << "meet over " << p->to_string() << "\n";
  else
    out << "no incidence: total sums differ\n";
  return kOk;
}

int cmd_verify_forms(std::ostream& out, const Options& o) {
  RootDatum rd = load_group_or_form_datum(o);
  QForm q = load_form(rd, o);
  std::mt19937 rng(o.seed);
  std::uniform_int_distribution<long> coord(-o.bound, o.bound);
  auto sample = [&] {
    IntVector v(rd.rank);
    for (auto& x : v) x = coord(rng);
    return v;
  };
  long quad = 0, sym = 0, winv = 0, eps = 0, bil = 0, qdr = 0;
  for (long s = 0; s < o.samples; ++s) {
    IntVector l = sample(), m = sample(), n = sample();
    if (q.value(add(l, m)) == q.value(l) + q.value(m) + q.kappa(l, m)) ++quad;
    if (q.kappa(l, m) == q.kappa(m, l)) ++sym;
    bool inv = true;
    for (std::size_t i = 0; i < rd.semisimple_rank(); ++i)
      if (q.kappa(reflect_coweight(rd, i, l), reflect_coweight(rd, i, m)) != q.kappa(l, m)) inv = false;
    if (inv) ++winv;
    bool e = true;
    for (std::size_t i = 0; i < rd.semisimple_rank(); ++i)
      if (!epsilon_defect(q, rd.coroot(i), l).is_zero()) e = false;
    if (e) ++eps;
    if (verify_bilinearity(q, l, m, n)) ++bil;
    if (verify_quadratic(q, l, m)) ++qdr;
  }
  const long t = o.samples;
  out << "samples: " << t << "\n";
  out << "quadratic law: " << quad << "/" << t << "\n";
  out << "symmetry: " << sym << "/" << t << "\n";
  out << "W-invariance: " << winv << "/" << t << "\n";
  out << "epsilon defect zero: " << eps << "/" << t << "\n";
  out << "ledger bilinearity: " << bil << "/" << t << "\n";
  out << "ledger quadratic: " << qdr << "/" << t << "\n";
  bool ok = quad == t && sym == t && winv == t && eps == t && bil == t && qdr == t;
  out << (ok ? "all checks passed" : "CHECKS FAILED") << "\n";
  return ok ? kOk : kDomainError;
}

int cmd_rank1(std::ostream& out, const Options& o) {
  std::vector<Int> r0s;
  if (o.r0.empty()) {
    for (long r = 1; r <= 16; ++r) r0s.emplace_back(r);
  } else {
    r0s.push_back(o.r0 == "inf" ? Int(0) : Int(parse_vector(o.r0).front()));
  }
  bool all = true;
  for (const Int& r0 : r0s) {
    std::vector<Int> ps;
    if (!o.p.empty()) {
      ps.push_back(parse_vector(o.p).front());
    } else if (r0 == 0) {
      ps.emplace_back(1);
    } else {
      for (Int p = 0; p < r0; ++p) {
        Int g;
        mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), r0.get_mpz_t());
        if (g == 1) ps.push_back(p);
      }
    }
    auto expected = rank1_expected_generators(r0);
    for (const Int& p : ps) {
      Rank1Row row = rank1_table(r0, p);
      bool match = row.pgl2 == Sublattice(1, IntMatrix::from_rows({{expected.first}})) &&
                   row.sl2 == Sublattice(1, IntMatrix::from_rows({{expected.second}}));
      all = all && match;
      out << "r0=" << (r0 == 0 ? std::string("inf") : r0.get_str()) << " p=" << p << " case=" << row.case_label
          << " PGL2: " << lattice_string(row.pgl2) << " SL2: " << lattice_string(row.sl2)
          << (match ? " (matches case split)" : " (DIFFERS from case split)") << "\n";
    }
  }
  return all ? kOk : kDomainError;
}

int cmd_killing(std::ostream& out, const Options& o) {
  RootDatum rd = load_group(o);
  if (o.component >= 0) {
    out << "killing: " << to_string(killing_matrix(rd, static_cast<std::size_t>(o.component))) << "\n";
    out << "dual coxeter: " << dual_coxeter_number(rd, static_cast<std::size_t>(o.component)) << "\n";
    return kOk;
  }
  out << "killing: " << to_string(killing_matrix(rd)) << "\n";
  out << "normalized: " << to_string(normalized_killing(rd)) << "\n";
  out << "minimal even: " << to_string(minimal_killing(rd)) << "\n";
  if (components(rd).size() == 1) {
    DualCoxeter dc = dual_coxeter_and_iota(rd);
    out << "dual coxeter: " << dc.h_check << "\n";
    out << "iota: " << to_string(dc.iota) << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Twisted dual root data, their comparisons and character checks"};
  app.name("tdual");
  app.require_subcommand(1);
  Options o;

  auto add_group = [&](CLI::App* c) {
    c->add_option("--group", o.group, "preset label such as SL2, PGL3, GL2, Sp4, G2, T1, SL2xT1");
    c->add_option("--datum", o.datum, "root datum JSON file");
  };
  auto add_form = [&](CLI::App* c) {
    c->add_option("--form", o.form, "quadratic form JSON file");
    c->add_option("--q-exp", o.q_exp, "exponent e: Gram e times the minimal even Killing form");
    c->add_option("--gram", o.gram, "rational Gram 'a,b;c,d'");
    c->add_option("--mode", o.mode, "kernel mode: full or coroot");
  };
  auto add_output = [&](CLI::App* c) {
    c->add_flag("--json", o.json, "print JSON instead of a report");
    c->add_option("--out", o.out_path, "also write JSON to this file");
  };

  auto* dual = app.add_subcommand("dual", "twisted dual of a quadratic form");
  add_group(dual);
  add_form(dual);
  add_output(dual);

  auto* fl = app.add_subcommand("fl-dual", "dual from the level (d, N) construction");
  add_group(fl);
  fl->add_option("--d", o.d, "level denominator")->required();
  fl->add_option("--N", o.n, "root of unity order")->required();
  add_output(fl);

  auto* lus = app.add_subcommand("lusztig-dual", "dual of a Cartan datum at an l-th root of unity");
  add_group(lus);
  lus->add_option("--l", o.l, "order of the root of unity")->required();
  lus->add_option("--f", o.f_values, "values f(i) on simple coroots, comma separated");
  add_output(lus);

  auto* lang = app.add_subcommand("langlands", "Langlands dual root datum as JSON");
  add_group(lang);
  lang->add_option("--out", o.out_path, "write JSON here as well");

  auto* qp = app.add_subcommand("quantum-pair", "left and right duals of a nondegenerate form and their isomorphism");
  add_group(qp);
  qp->add_option("--scale", o.scale, "b = scale times the normalized Killing form");
  qp->add_option("--gram", o.gram, "explicit Gram for b");

  auto* cmp = app.add_subcommand("compare", "compare two constructions up to isomorphism");
  cmp->add_option("left", o.left_kind, "fl, lusztig, langlands, source, twisted or file:PATH")->required();
  cmp->add_option("right", o.right_kind, "same choices as left")->required();
  add_group(cmp);
  add_form(cmp);
  cmp->add_option("--d", o.d, "level denominator");
  cmp->add_option("--N", o.n, "root of unity order");
  cmp->add_option("--l", o.l, "Lusztig root of unity order");
  cmp->add_option("--f", o.f_values, "Lusztig f on simple coroots, comma separated");

  auto* ten = app.add_subcommand("tensor", "decompose a tensor product of irreducibles");
  add_group(ten);
  ten->add_option("--a", o.a, "dominant highest weight, comma separated")->required();
  ten->add_option("--b", o.b, "dominant highest weight, comma separated")->required();

  auto* wts = app.add_subcommand("weights", "weight multiplicities of an irreducible representation");
  add_group(wts);
  wts->add_option("--highest", o.highest, "dominant highest weight, comma separated")->required();

  auto* inc = app.add_subcommand("incidence", "partition over which two components meet");
  inc->add_option("--lattice", o.lattice, "Z or Z^r");
  inc->add_option("--a", o.a, "coweight tuple of the first point, ';' between coweights when r > 1")->required();
  inc->add_option("--b", o.b, "coweight tuple of the second point, same length")->required();

  auto* vf = app.add_subcommand("verify-forms", "sampled checks of the form laws and the divisor ledger");
  add_group(vf);
  add_form(vf);
  vf->add_option("--samples", o.samples, "random triples to test (default 50)");
  vf->add_option("--seed", o.seed, "mt19937 seed (default 1)");
  vf->add_option("--bound", o.bound, "coordinate bound for samples (default 5)");

  auto* val = app.add_subcommand("validate", "check the root datum axioms");
  add_group(val);
  val->add_option("--out", o.out_path, "write the validated datum as JSON");

  auto* r1 = app.add_subcommand("rank1-table", "rank one kernels for PGL2 and SL2");
  r1->add_option("--r0", o.r0, "order of q0, or inf");
  r1->add_option("--p", o.p, "exponent numerator, a unit mod r0");

  auto* kil = app.add_subcommand("killing", "Killing-type forms and the dual Coxeter number");
  add_group(kil);
  kil->add_option("--component", o.component, "0-based index of a simple factor (default: all)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*dual) {
      RootDatum rd = load_group_or_form_datum(o);
      emit_dual(out, twisted_dual(load_form(rd, o), parse_mode(o.mode)), o);
    } else if (*fl) {
      emit_dual(out, fl_dual(load_group(o), o.d, o.n), o);
    } else if (*lus) {
      RootDatum rd = load_group(o);
      emit_dual(out, lusztig_dual(cartan_datum(rd, f_values(rd, o)), o.l), o);
    } else if (*lang) {
      io::Json j = io::root_datum_to_json(langlands_dual(load_group(o)));
      if (!o.out_path.empty()) io::save(o.out_path, j);
      out << j.dump(2) << "\n";
    } else if (*qp) {
      return cmd_quantum(out, o);
    } else if (*cmp) {
      return cmd_compare(out, o);
    } else if (*ten) {
      RootDatum rd = load_group(o);
      auto parts = tensor_decompose(irreducible_character(rd, parse_vector(o.a)), irreducible_character(rd, parse_vector(o.b)));
      out << "constituents:\n";
      for (const auto& [nu, m] : parts) out << "  " << to_string(nu) << ": " << m << "\n";
    } else if (*wts) {
      Character ch = irreducible_character(load_group(o), parse_vector(o.highest));
      out << ch.to_table();
      out << "dimension: " << ch.dimension() << "\n";
    } else if (*inc) {
      return cmd_incidence(out, o);
    } else if (*vf) {
      return cmd_verify_forms(out, o);
    } else if (*val) {
      RootDatum rd = load_group(o);
      validate(rd);
      if (!o.out_path.empty()) io::save(o.out_path, io::root_datum_to_json(rd));
      out << "valid root datum\n";
      out << "type: " << describe(rd) << "\n";
      out << "Weyl group order: " << weyl_group(rd).order() << "\n";
      out << "pi1: " << pi1(rd).to_string() << "\n";
    } else if (*r1) {
      return cmd_rank1(out, o);
    } else if (*kil) {
      return cmd_killing(out, o);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return kOk;
}

}  // namespace tdual::cli
