#include "vvmf/cases.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <regex>
#include <set>
#include <sstream>

namespace vvmf {

namespace fs = std::filesystem;

namespace {

const std::vector<std::string> kFixtureCases = {"d4", "d7", "d8", "d11", "d15", "d19", "d20", "d24"};

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream ls(line);
  std::vector<std::string> out;
  for (std::string t; ls >> t;) out.push_back(t);
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty()) s += sep;
    s += p;
  }
  return s;
}

std::string coords_str(const RatVector& v) {
  std::vector<std::string> parts;
  for (const auto& c : v) parts.push_back(c.str());
  return join(parts, ",");
}

std::int64_t case_discriminant(const std::string& name) {
  if (name.size() < 2 || name[0] != 'd') throw std::invalid_argument("not a fixture case: " + name);
  return std::stoll(name.substr(1));
}

// Lines of a fixture text file without comments and blank lines.
std::vector<std::vector<std::string>> read_table(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<std::vector<std::string>> rows;
  for (std::string line; std::getline(in, line);) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto t = split_ws(line);
    if (!t.empty()) rows.push_back(std::move(t));
  }
  return rows;
}

class FixtureCase {
 public:
  FixtureCase(fs::path fixtures, std::string name)
      : fixtures_(std::move(fixtures)), name_(std::move(name)), d_(case_discriminant(name_)) {}

  Report run() {
    Report r;
    for (const auto& t : read_table(fixtures_ / name_ / "checks.txt")) run_line(t, r);
    return r;
  }

 private:
  const VVForm& form(const std::string& f) {
    auto it = forms_.find(f);
    if (it == forms_.end()) it = forms_.emplace(f, load_form_file(fixture_path(fixtures_, name_ + "/" + f))).first;
    return it->second;
  }

  void run_line(const std::vector<std::string>& t, Report& r) {
    const std::string& kind = t[0];
    const std::string prefix = name_ + "/";
    auto guarded = [&](const std::string& name, const std::string& expected, const std::function<std::string()>& fn) {
      std::string computed;
      try {
        computed = fn();
      } catch (const std::exception& e) {
        computed = std::string("error: ") + e.what();
      }
      r.expect(name, expected, computed);
    };
    auto need = [&](std::size_t n) {
      if (t.size() < n) throw std::invalid_argument(name_ + "/checks.txt: too few fields for '" + kind + "'");
    };

    if (kind == "weight") {
      need(3);
      guarded(prefix + "weight(" + t[1] + ")", Frac::parse(t[2]).str(),
              [&] { return borcherds_weight(principal_part(form(t[1]))).str(); });
    } else if (kind == "divisor") {
      need(3);
      std::string expected;
      try {
        const VVForm& f = form(t[1]);
        std::vector<DivisorTerm> terms;
        for (std::size_t i = 2; i < t.size(); ++i) terms.push_back(parse_divisor_term(*f.disc, t[i]));
        expected = render_divisor_terms(*f.disc, terms);
      } catch (const std::exception& e) {
        expected = join({t.begin() + 2, t.end()}, " ");
      }
      guarded(prefix + "divisor(" + t[1] + ")", expected, [&] {
        const PrincipalPart p = principal_part(form(t[1]));
        return divisor_summary(borcherds_divisor(p, singular_extent(p)));
      });
    } else if (kind == "divisor-includes") {
      need(3);
      for (std::size_t i = 2; i < t.size(); ++i) {
        const std::string& token = t[i];
        const auto eq = token.rfind('=');
        const std::string lhs = token.substr(0, eq);
        const std::string expected = eq == std::string::npos ? "?" : Frac::parse(token.substr(eq + 1)).str();
        guarded(prefix + "divisor(" + t[1] + ")/" + lhs, expected, [&] {
          const VVForm& f = form(t[1]);
          const PrincipalPart p = principal_part(f);
          const HeegnerDivisor div = borcherds_divisor(p, singular_extent(p));
          const DivisorTerm term = parse_divisor_term(*f.disc, lhs);
          auto mult = [&](std::size_t rep) {
            for (const auto& e : div.at(term.m)) {
              if (e.component.rep == rep) return e.multiplicity;
            }
            return Frac(0);
          };
          if (term.rep) return mult(*term.rep).str();
          std::set<std::string> values;
          for (const auto& pair : heegner_components(*f.disc, term.m)) values.insert(mult(pair.rep).str());
          if (values.empty()) return std::string("no components");
          return values.size() == 1 ? *values.begin() : "mixed{" + join({values.begin(), values.end()}, ",") + "}";
        });
      }
    } else if (kind == "coeff") {
      need(5);
      guarded(prefix + "coeff(" + t[1] + "," + t[2] + "," + t[3] + ")", Frac::parse(t[4]).str(), [&] {
        const VVForm& f = form(t[1]);
        return f.coeff(Frac::parse(t[2]), f.disc->index_of(parse_coords(t[3]))).str();
      });
    } else if (kind == "bb-support") {
      need(2);
      const std::vector<std::string> names(t.begin() + 1, t.end());
      guarded(prefix + "bb-support(" + join(names, ",") + ")", "minus space", [&] {
        const DiscPtr disc = make_disc(hermitian_lattice(d_));
        for (const auto& n : names) {
          const ScalarForm s = read_scalar_form_file(fixture_path(fixtures_, name_ + "/" + n));
          const VVForm lifted = bb_lift(s.series, s.p, disc, s.weight);
          if (!(bb_collapse(lifted, s.p) == s.series)) return n + ": round trip differs";
          const Report v = validate(lifted, Symmetry::even);
          if (!v.ok()) return n + ": " + v.first_failure();
        }
        return std::string("minus space");
      });
    } else if (kind == "pairing-zero") {
      need(3);
      guarded(prefix + "pairing-zero(" + t[1] + ")", "0", [&] {
        const ScalarForm s = read_scalar_form_file(fixture_path(fixtures_, name_ + "/" + t[1]));
        const EvenLattice ok = ok_lattice(d_);
        const VVForm f = lift_scalar(s, ok);
        const VVForm g = serre_derivative(theta_series(ok, Frac::parse(t[2])));
        return pairing_constant_term(f, g).str();
      });
    } else if (kind == "additive") {
      need(3);
      guarded(prefix + "additive(" + t[1] + ")", Frac::parse(t[2]).str(),
              [&] { return additive_lift_meta(form(t[1]), 4).weight.str(); });
    } else if (kind == "additive-poles") {
      need(3);
      std::string expected;
      try {
        const VVForm& f = form(t[1]);
        std::vector<DivisorTerm> terms;
        for (std::size_t i = 2; i < t.size(); ++i) terms.push_back(parse_divisor_term(*f.disc, t[i]));
        expected = render_divisor_terms(*f.disc, terms);
      } catch (const std::exception&) {
        expected = join({t.begin() + 2, t.end()}, " ");
      }
      guarded(prefix + "additive-poles(" + t[1] + ")", expected,
              [&] { return divisor_summary(additive_lift_meta(form(t[1]), 4).divisor, false); });
    } else if (kind == "valid") {
      need(2);
      const Symmetry sym = t.size() < 3 ? Symmetry::none : t[2] == "even" ? Symmetry::even : Symmetry::odd;
      guarded(prefix + "valid(" + t[1] + (t.size() < 3 ? "" : "," + t[2]) + ")", "ok", [&] {
        const Report v = validate(form(t[1]), sym);
        return v.ok() ? std::string("ok") : v.first_failure();
      });
    } else {
      throw std::invalid_argument(name_ + "/checks.txt: unknown check kind '" + kind + "'");
    }
  }

  fs::path fixtures_;
  std::string name_;
  std::int64_t d_;
  std::map<std::string, VVForm> forms_;
};

Report weil_case() {
  Report r;
  for (const auto d : standard_discriminants()) {
    const DiscriminantForm disc(hermitian_lattice(d));
    const std::string p = "weil/d" + std::to_string(d);
    r.expect(p + "/|D|", std::to_string(d), std::to_string(disc.size()));
    const int sig = signature_mod8(disc);
    r.expect(p + "/sig", "2", std::to_string(sig));
    r.merge(check_relations(disc, sig), p);
  }
  return r;
}

Report serre_case() {
  Report r;
  for (const std::int64_t d : {7, 8, 11, 15, 19, 20, 24}) {
    const std::string p = "serre/d" + std::to_string(d);
    const EvenLattice ok = ok_lattice(d);
    const VVForm theta = theta_series(ok, Frac(2));
    const VVForm g = serre_derivative(theta);
    const Frac inv_d(1, static_cast<long>(d));
    r.expect(p + "/weight", "3", g.weight.str());
    r.expect(p + "/e0-constant", Frac(-1, 12).str(), g.coeff(Frac(0), 0).str());
    std::vector<CosetPair> pairs;
    for (const auto& pair : heegner_components(*g.disc, inv_d)) {
      if (!theta.coeff(inv_d, pair.rep).is_zero()) pairs.push_back(pair);
    }
    r.expect(p + "/norm-1/d-pairs", "1", std::to_string(pairs.size()));
    if (pairs.size() == 1) {
      const Frac want = inv_d - Frac(1, 12);
      r.expect(p + "/q^(1/d)e_v", want.str(), g.coeff(inv_d, pairs[0].rep).str());
      r.expect(p + "/q^(1/d)e_-v", want.str(), g.coeff(inv_d, pairs[0].neg).str());
    }
    r.expect(p + "/q^1e0", Frac(23, 6).str(), g.coeff(Frac(1), 0).str());
  }
  return r;
}

Report contract_case(const fs::path& fixtures) {
  Report r;
  auto run = [&](const std::string& ref, auto&& body) {
    try {
      body(theta_contract(load_form_file(fixture_path(fixtures, ref)), 3));
    } catch (const std::exception& e) {
      r.expect("contract/" + ref, "contracted", std::string("error: ") + e.what());
    }
  };
  run("d8/H-1", [&](const VVForm& c) {
    const FracSeries& e0 = c.components.at(0);
    r.expect("contract/d8/e0", "q^-1 + 70", series_str(e0));
    r.expect("contract/d8/prec>0", "true", e0.prec() > Frac(0) ? "true" : "false (" + e0.prec().str() + ")");
    r.expect("contract/d8/weight", "-1/2", c.weight.str());
  });
  run("d4/G-1", [&](const VVForm& c) {
    r.expect("contract/d4/constant", "70", c.coeff(Frac(0), 0).str());
    r.expect("contract/d4/weight", "-1/2", c.weight.str());
  });
  return r;
}

Report classify_case() {
  Report r;
  const Frac bound = Frac(35) - minimal_jacobian_weight();
  r.expect("classify/bound", "22", bound.str());
  for (const std::int64_t d : {7, 8, 11, 15, 19, 20, 23, 24}) {
    const std::string p = "classify/d" + std::to_string(d);
    try {
      const ClassifyResult c = classify_siegel(d);
      r.expect(p + "/m", std::to_string(d), c.m.str());
      r.expect(p + "/wtJ", std::to_string(35 - d), c.wt_j.str());
      r.expect(p + "/feasible", d <= 22 ? "yes" : "no", c.feasible ? "yes" : "no");
    } catch (const std::exception& e) {
      r.expect(p, "classified", std::string("error: ") + e.what());
    }
  }
  for (const std::int64_t d : {3, 4}) {
    std::string got = "accepted";
    try {
      (void)classify_siegel(d);
    } catch (const std::invalid_argument&) {
      got = "rejected";
    }
    r.expect("classify/guard(d=" + std::to_string(d) + ")", "rejected", got);
  }
  return r;
}

// Rows: d, generator weights, product fixture, listed product weight.
Report table1_case(const fs::path& fixtures) {
  Report r;
  std::vector<Table1Row> rows;
  for (const auto& t : read_table(fixtures / "table1.txt")) {
    const std::string name = "table1/d" + t.at(0);
    try {
      Table1Row row{std::stoll(t.at(0)), parse_coords(t.at(1)), principal_part(load_form_file(fixture_path(fixtures, t.at(2))))};
      r.expect(name + "/listed", Frac::parse(t.at(3)).str(), borcherds_weight(row.product).str());
      rows.push_back(std::move(row));
    } catch (const std::exception& e) {
      r.expect(name, "loaded", std::string("error: ") + e.what());
    }
  }
  r.merge(verify_table1(rows), "table1");
  return r;
}

}  // namespace

const std::vector<std::string>& case_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n = kFixtureCases;
    for (const char* extra : {"weil", "serre", "contract", "classify", "table1"}) n.emplace_back(extra);
    return n;
  }();
  return names;
}

Report verify_case(const std::string& name, const fs::path& fixtures) {
  if (std::find(kFixtureCases.begin(), kFixtureCases.end(), name) != kFixtureCases.end()) {
    return FixtureCase(fixtures, name).run();
  }
  if (name == "weil") return weil_case();
  if (name == "serre") return serre_case();
  if (name == "contract") return contract_case(fixtures);
  if (name == "classify") return classify_case();
  if (name == "table1") return table1_case(fixtures);
  throw std::invalid_argument("unknown case '" + name + "'");
}

Report verify_all(const fs::path& fixtures) {
  Report r;
  for (const auto& name : case_names()) r.merge(verify_case(name, fixtures));
  return r;
}

VVForm lift_scalar(const ScalarForm& s, const EvenLattice& lattice) {
  return bb_lift(s.series, s.p, make_disc(lattice), s.weight);
}

VVForm load_form_file(const fs::path& path) {
  if (path.extension() == ".bb") {
    const ScalarForm s = read_scalar_form_file(path);
    return lift_scalar(s, hermitian_lattice(s.p));
  }
  return read_vvform_file(path);
}

fs::path fixture_path(const fs::path& fixtures, const std::string& ref) {
  for (const char* ext : {".vv", ".bb"}) {
    fs::path p = fixtures / (ref + ext);
    if (fs::exists(p)) return p;
  }
  throw std::runtime_error("no fixture " + ref + " under " + fixtures.string());
}

DivisorTerm parse_divisor_term(const DiscriminantForm& d, const std::string& token) {
  static const std::regex re(R"(H\(([^;)]+)(?:;([^)]*))?\)(?:=(.+))?)");
  std::smatch m;
  if (!std::regex_match(token, m, re)) throw std::invalid_argument("bad divisor term '" + token + "'");
  DivisorTerm t{Frac::parse(m[1].str()), std::nullopt, std::nullopt};
  if (m[2].matched) {
    const std::size_t x = d.index_of(parse_coords(m[2].str()));
    if (d.q(x) != t.m.mod1()) throw std::invalid_argument("coset in '" + token + "' does not have norm " + t.m.str());
    t.rep = std::min(x, d.neg_index(x));
  }
  if (m[3].matched) t.value = Frac::parse(m[3].str());
  return t;
}

std::string render_divisor_terms(const DiscriminantForm& d, std::vector<DivisorTerm> terms) {
  std::sort(terms.begin(), terms.end(), [](const DivisorTerm& a, const DivisorTerm& b) {
    if (a.m != b.m) return a.m < b.m;
    return a.rep.value_or(0) < b.rep.value_or(0);
  });
  std::vector<std::string> parts;
  for (const auto& t : terms) {
    std::string s = "H(" + t.m.str();
    if (t.rep) s += ";" + coords_str(d.element(*t.rep).coords);
    s += ")";
    if (t.value) s += "=" + t.value->str();
    parts.push_back(s);
  }
  return parts.empty() ? "0" : join(parts, " ");
}

std::string divisor_summary(const HeegnerDivisor& div, bool with_values) {
  const DiscriminantForm& d = *div.disc;
  std::map<Frac, std::vector<HeegnerEntry>> by_m;
  for (const auto& e : div.entries) by_m[e.m].push_back(e);
  std::vector<DivisorTerm> terms;
  for (const auto& [m, entries] : by_m) {
    const std::size_t total = heegner_components(d, m).size();
    const bool uniform = entries.size() == total && std::all_of(entries.begin(), entries.end(), [&](const HeegnerEntry& e) {
                           return e.multiplicity == entries.front().multiplicity;
                         });
    auto value = [&](const Frac& v) { return with_values ? std::optional<Frac>(v) : std::nullopt; };
    if (uniform) {
      terms.push_back({m, std::nullopt, value(entries.front().multiplicity)});
    } else {
      for (const auto& e : entries) terms.push_back({m, e.component.rep, value(e.multiplicity)});
    }
  }
  return render_divisor_terms(d, terms);
}

}  // namespace vvmf
