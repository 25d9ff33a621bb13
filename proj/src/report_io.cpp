#include "covers/report_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "covers/datum_parse.hpp"

namespace covers {

namespace {

std::string quote_csv(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  out += '"';
  return out;
}

OrderedJson datum_json(
    const std::variant<CyclicCoverDatum, AbelianCoverDatum>& datum) {
  OrderedJson j;
  if (const auto* c = std::get_if<CyclicCoverDatum>(&datum)) {
    j["type"] = "cyclic";
    j["m"] = c->m;
    j["N"] = c->branch_count();
    j["a"] = c->a;
  } else {
    const auto& ab = std::get<AbelianCoverDatum>(datum);
    j["type"] = "abelian";
    j["m1"] = ab.m1;
    j["m2"] = ab.m2;
    j["N"] = ab.branch_count();
    OrderedJson list = OrderedJson::array();
    for (const auto& p : ab.a)
      list.push_back(OrderedJson::array({p.first, p.second}));
    j["a"] = std::move(list);
  }
  return j;
}

OrderedJson multiplicities_json(const SpecialityReport& r) {
  OrderedJson list = OrderedJson::array();
  if (const auto* mv = std::get_if<MultiplicityVector>(&r.multiplicities)) {
    for (std::int64_t n = 1; n < mv->modulus(); ++n)
      list.push_back(OrderedJson::array({n, mv->at(n)}));
  } else {
    const auto& amv = std::get<AbelianMultiplicityVector>(r.multiplicities);
    for (std::int64_t c1 = 0; c1 < amv.m1(); ++c1)
      for (std::int64_t c2 = 0; c2 < amv.m2(); ++c2) {
        if (c1 == 0 && c2 == 0) continue;
        list.push_back(OrderedJson::array(
            {OrderedJson::array({c1, c2}), amv.at(Character{c1, c2})}));
      }
  }
  return list;
}

OrderedJson factor_json(const AdjointFactor& f) {
  OrderedJson j;
  if (f.kind == AdjointFactor::Kind::SpecialUnitary) {
    j["kind"] = "SU";
    j["p"] = f.p;
    j["q"] = f.q;
  } else {
    j["kind"] = "Sp";
    j["h"] = f.h;
  }
  j["delta"] = f.delta();
  return j;
}

std::string group_label_of(const SpecialityReport& r) {
  if (const auto* c = std::get_if<CyclicCoverDatum>(&r.datum))
    return group_label(*c);
  return group_label(std::get<AbelianCoverDatum>(r.datum));
}

std::string monodromy_of(const SpecialityReport& r) {
  if (const auto* c = std::get_if<CyclicCoverDatum>(&r.datum))
    return format_monodromy(*c);
  return format_monodromy(std::get<AbelianCoverDatum>(r.datum));
}

std::string datum_text_of(const SpecialityReport& r) {
  if (const auto* c = std::get_if<CyclicCoverDatum>(&r.datum))
    return to_text(*c);
  return to_text(std::get<AbelianCoverDatum>(r.datum));
}

std::int64_t branch_count_of(const SpecialityReport& r) {
  if (const auto* c = std::get_if<CyclicCoverDatum>(&r.datum))
    return c->branch_count();
  return std::get<AbelianCoverDatum>(r.datum).branch_count();
}

std::string chi_string(const std::vector<std::int64_t>& chi) {
  if (chi.size() == 1) return std::to_string(chi[0]);
  return "(" + std::to_string(chi[0]) + "," + std::to_string(chi[1]) + ")";
}

std::string induced_string(const CharacterPairRow& p) {
  if (p.induced_a.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < p.induced_a.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p.induced_a[i]);
  }
  return s;
}

}  // namespace

std::string dump_json(const OrderedJson& j) { return j.dump(2) + "\n"; }

OrderedJson to_json(const SpecialityReport& r) {
  OrderedJson j;
  j["schema"] = 1;
  j["kind"] = "speciality_report";
  j["datum"] = datum_json(r.datum);
  j["genus"] = r.genus;
  j["family_dim"] = r.family_dim;
  j["dim_S"] = r.dim_special;
  j["is_special"] = r.is_special;
  j["multiplicities"] = multiplicities_json(r);
  OrderedJson factors = OrderedJson::array();
  for (const auto& f : r.adjoint_factors) factors.push_back(factor_json(f));
  j["adjoint_factors"] = std::move(factors);
  j["notes"] = r.notes;
  return j;
}

OrderedJson to_json(const ExclusionReport& r) {
  OrderedJson j;
  j["schema"] = 1;
  j["kind"] = "exclusion_report";
  j["g"] = r.g;
  j["albert_type"] = r.albert_type == AlbertType::I ? "I" : "II";
  j["all_excluded"] = r.all_excluded;
  OrderedJson cases = OrderedJson::array();
  for (const auto& c : r.cases) {
    OrderedJson cj;
    cj["e"] = c.e;
    cj["h"] = c.h;
    cj["dim_S"] = c.dim_s;
    cj["verdict"] = c.verdict == CaseVerdict::Excluded
                        ? "excluded"
                        : "not-excluded-by-these-arguments";
    cj["check_failed"] = c.check_failed;
    cj["rule_trace"] = c.rule_trace;
    cases.push_back(std::move(cj));
  }
  j["cases"] = std::move(cases);
  j["notes"] = r.notes;
  return j;
}

OrderedJson to_json(const ClassificationTable& t) {
  OrderedJson j;
  j["schema"] = 1;
  j["kind"] = "classification_table";
  j["flavor"] = t.abelian ? "abelian" : "cyclic";
  OrderedJson bounds;
  if (t.abelian) {
    OrderedJson groups = OrderedJson::array();
    for (auto [m1, m2] : t.bounds.groups)
      groups.push_back(std::to_string(m1) + "x" + std::to_string(m2));
    bounds["groups"] = std::move(groups);
    bounds["n_max"] = t.bounds.n_max;
  } else {
    bounds["m_max"] = t.bounds.m_max;
    bounds["n_max"] = t.bounds.n_max;
  }
  if (t.bounds.genus_max)
    bounds["genus_max"] = *t.bounds.genus_max;
  else
    bounds["genus_max"] = nullptr;
  j["bounds"] = std::move(bounds);
  j["candidates_examined"] = t.candidates_examined;
  j["row_count"] = static_cast<std::int64_t>(t.rows.size());
  OrderedJson rows = OrderedJson::array();
  for (const auto& row : t.rows) {
    OrderedJson rj;
    rj["index"] = row.index;
    rj["genus"] = row.report.genus;
    rj["group"] = group_label_of(row.report);
    rj["N"] = branch_count_of(row.report);
    rj["a"] = monodromy_of(row.report);
    rj["notes"] = row.notes;
    rj["report"] = to_json(row.report);
    rows.push_back(std::move(rj));
  }
  j["rows"] = std::move(rows);
  return j;
}

OrderedJson to_json(const DecompositionReport& r) {
  OrderedJson j;
  j["schema"] = 1;
  j["kind"] = "decomposition_report";
  j["datum"] = datum_json(r.datum);
  OrderedJson pairs = OrderedJson::array();
  for (const auto& p : r.pairs) {
    OrderedJson pj;
    pj["chi"] = p.chi;
    pj["chi_conj"] = p.chi_conj;
    pj["real"] = p.real;
    pj["order"] = p.order;
    pj["induced_a"] = p.induced_a;
    pj["d"] = p.d;
    pj["d_conj"] = p.d_conj;
    pj["class"] = pair_class_name(p.cls);
    pairs.push_back(std::move(pj));
  }
  j["pairs"] = std::move(pairs);
  OrderedJson counts;
  counts["zero"] = r.zero_pairs;
  counts["isotrivial_cm"] = r.isotrivial_cm_pairs;
  counts["moving"] = r.moving_pairs;
  j["counts"] = std::move(counts);
  return j;
}

std::string summary_line(const SpecialityReport& r) {
  std::string s = datum_text_of(r) + ": genus " + std::to_string(r.genus) +
                  ", family dim " + std::to_string(r.family_dim) +
                  ", dim S " + std::to_string(r.dim_special) + ", " +
                  (r.is_special ? "special" : "not special");
  return s;
}

std::string render_text(const SpecialityReport& r) {
  std::ostringstream out;
  out << "datum      : " << datum_text_of(r) << "   (canonical form)\n";
  out << "genus      : " << r.genus << "\n";
  out << "d          :";
  if (const auto* mv = std::get_if<MultiplicityVector>(&r.multiplicities)) {
    for (std::int64_t n = 1; n < mv->modulus(); ++n)
      out << " d_" << n << "=" << mv->at(n);
  } else {
    const auto& amv = std::get<AbelianMultiplicityVector>(r.multiplicities);
    bool any = false;
    for (std::int64_t c1 = 0; c1 < amv.m1(); ++c1)
      for (std::int64_t c2 = 0; c2 < amv.m2(); ++c2) {
        if (c1 == 0 && c2 == 0) continue;
        std::int64_t d = amv.at(Character{c1, c2});
        if (d == 0) continue;
        out << " d_(" << c1 << "," << c2 << ")=" << d;
        any = true;
      }
    out << (any ? "  (all other characters 0)" : " 0 for every character");
  }
  out << "\n";
  out << "family dim : " << r.family_dim << "   (N - 3)\n";
  out << "dim S      : " << r.dim_special << "\n";
  out << "factors    : ";
  if (r.adjoint_factors.empty()) {
    out << "(none)";
  } else {
    for (std::size_t i = 0; i < r.adjoint_factors.size(); ++i) {
      if (i) out << " x ";
      out << r.adjoint_factors[i].label();
    }
  }
  out << "\n";
  out << "verdict    : " << (r.is_special ? "special" : "not special") << "\n";
  for (const auto& note : r.notes) out << "note       : " << note << "\n";
  return out.str();
}

std::string render_csv(const SpecialityReport& r) {
  std::ostringstream out;
  out << "group,N,a,genus,family_dim,dim_S,is_special\n";
  out << group_label_of(r) << ',' << branch_count_of(r) << ','
      << quote_csv(monodromy_of(r)) << ',' << r.genus << ',' << r.family_dim
      << ',' << r.dim_special << ',' << (r.is_special ? "true" : "false")
      << "\n";
  return out.str();
}

std::string render_text(const ExclusionReport& r) {
  std::ostringstream out;
  out << "Albert type " << (r.albert_type == AlbertType::I ? "I" : "II")
      << " exclusion for g = " << r.g << "\n";
  for (const auto& note : r.notes) out << "  note: " << note << "\n";
  for (const auto& c : r.cases) {
    out << "  e = " << c.e << "  h = " << c.h << "  dim S = " << c.dim_s
        << "\n";
    for (const auto& line : c.rule_trace) out << "    " << line << "\n";
    out << "    -> "
        << (c.verdict == CaseVerdict::Excluded
                ? "excluded"
                : "not excluded by these arguments")
        << "\n";
  }
  if (r.cases.empty()) {
    out << "  (no admissible degrees)\n";
    out << "overall: vacuous\n";
  } else {
    out << "overall: "
        << (r.all_excluded ? "every case excluded" : "not excluded") << "\n";
  }
  return out.str();
}

std::string render_csv(const ExclusionReport& r) {
  std::ostringstream out;
  out << "g,albert_type,e,h,dim_S,verdict,check_failed\n";
  for (const auto& c : r.cases) {
    out << r.g << ',' << (r.albert_type == AlbertType::I ? "I" : "II") << ','
        << c.e << ',' << c.h << ',' << c.dim_s << ','
        << (c.verdict == CaseVerdict::Excluded
                ? "excluded"
                : "not-excluded-by-these-arguments")
        << ',' << (c.check_failed ? "true" : "false") << "\n";
  }
  return out.str();
}

std::string render_text(const DecompositionReport& r) {
  std::ostringstream out;
  std::string datum_text;
  if (const auto* c = std::get_if<CyclicCoverDatum>(&r.datum))
    datum_text = to_text(*c);
  else
    datum_text = to_text(std::get<AbelianCoverDatum>(r.datum));
  out << "character-orbit decomposition for " << datum_text << "\n";
  for (const auto& p : r.pairs) {
    out << "  {" << chi_string(p.chi);
    if (!p.real) out << ", " << chi_string(p.chi_conj);
    out << "}" << (p.real ? " (real)" : "") << "  order " << p.order
        << "  induced a = " << induced_string(p) << "  (d, d~) = (" << p.d
        << ", " << p.d_conj << ")  " << pair_class_name(p.cls) << "\n";
  }
  out << "zero pairs: " << r.zero_pairs
      << "   isotrivial CM pairs: " << r.isotrivial_cm_pairs
      << "   moving pairs: " << r.moving_pairs << "\n";
  return out.str();
}

std::string render_csv(const DecompositionReport& r) {
  std::ostringstream out;
  out << "chi,chi_conj,real,order,induced_a,d,d_conj,class\n";
  for (const auto& p : r.pairs) {
    out << quote_csv(chi_string(p.chi)) << ','
        << quote_csv(chi_string(p.chi_conj)) << ','
        << (p.real ? "true" : "false") << ',' << p.order << ','
        << quote_csv(induced_string(p)) << ',' << p.d << ',' << p.d_conj
        << ',' << pair_class_name(p.cls) << "\n";
  }
  return out.str();
}

std::string render_table(const ClassificationTable& t, int verbosity) {
  struct Line {
    std::string index, genus, group, n, a, notes;
  };
  std::vector<Line> lines;
  lines.push_back(Line{"index", "genus", t.abelian ? "group" : "m", "N", "a",
                       "notes"});
  for (const auto& row : t.rows) {
    Line l;
    l.index = std::to_string(row.index);
    l.genus = std::to_string(row.report.genus);
    l.group = group_label_of(row.report);
    l.n = std::to_string(branch_count_of(row.report));
    l.a = monodromy_of(row.report);
    for (std::size_t i = 0; i < row.notes.size(); ++i) {
      if (i) l.notes += "; ";
      l.notes += row.notes[i];
    }
    lines.push_back(std::move(l));
  }
  std::size_t w_index = 0, w_genus = 0, w_group = 0, w_n = 0, w_a = 0;
  for (const auto& l : lines) {
    w_index = std::max(w_index, l.index.size());
    w_genus = std::max(w_genus, l.genus.size());
    w_group = std::max(w_group, l.group.size());
    w_n = std::max(w_n, l.n.size());
    w_a = std::max(w_a, l.a.size());
  }
  std::ostringstream out;
  for (const auto& l : lines) {
    out << std::string(w_index - l.index.size(), ' ') << l.index << "  "
        << std::string(w_genus - l.genus.size(), ' ') << l.genus << "  "
        << std::string(w_group - l.group.size(), ' ') << l.group << "  "
        << std::string(w_n - l.n.size(), ' ') << l.n << "  " << l.a;
    if (!l.notes.empty())
      out << std::string(w_a - l.a.size() + 2, ' ') << l.notes;
    out << "\n";
  }
  out << "total: " << t.rows.size() << " classes";
  out << "  (candidates examined: " << t.candidates_examined << ")\n";
  if (verbosity > 0) {
    out << "generated: " << t.generated_at << "  elapsed: ";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3fs", t.elapsed_seconds);
    out << buf << "\n";
  }
  return out.str();
}

std::string render_csv(const ClassificationTable& t) {
  std::ostringstream out;
  out << "index,genus,group,N,a\n";
  for (const auto& row : t.rows) {
    out << row.index << ',' << row.report.genus << ','
        << group_label_of(row.report) << ',' << branch_count_of(row.report)
        << ',' << quote_csv(monodromy_of(row.report)) << "\n";
  }
  return out.str();
}

// ------------------------------------------------------------- golden diff --

namespace {

std::vector<std::string> split_csv_line(const std::string& line,
                                        std::size_t line_no) {
  std::vector<std::string> fields;
  std::string cur;
  bool in_quotes = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      in_quotes = true;
    } else if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  if (in_quotes)
    throw std::runtime_error("unterminated quote in CSV line " +
                             std::to_string(line_no));
  fields.push_back(cur);
  return fields;
}

}  // namespace

std::vector<GoldenRow> read_golden_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open golden file: " + path);
  std::vector<GoldenRow> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    auto fields = split_csv_line(line, line_no);
    if (line_no == 1) {
      if (fields != std::vector<std::string>{"index", "genus", "group", "N",
                                             "a"})
        throw std::runtime_error("golden file header must be "
                                 "index,genus,group,N,a");
      continue;
    }
    if (fields.size() != 5)
      throw std::runtime_error("golden line " + std::to_string(line_no) +
                               " has " + std::to_string(fields.size()) +
                               " fields, expected 5");
    GoldenRow r;
    r.index = std::stoll(fields[0]);
    r.genus = std::stoll(fields[1]);
    r.group = fields[2];
    r.n_branch = std::stoll(fields[3]);
    r.a = fields[4];
    rows.push_back(std::move(r));
  }
  return rows;
}

DiffResult diff_against(const ClassificationTable& table,
                        const std::string& golden_path) {
  DiffResult result;
  auto golden = read_golden_csv(golden_path);

  // Keys are canonical, so equivalent rows compare equal no matter how the
  // golden file spells its representatives.
  auto key_of_report = [](const SpecialityReport& r) {
    return group_label_of(r) + "|" + std::to_string(branch_count_of(r)) +
           "|" + monodromy_of(r);
  };

  std::set<std::string> produced;
  for (const auto& row : table.rows) produced.insert(key_of_report(row.report));

  std::set<std::string> wanted;
  for (const auto& g : golden) {
    std::string text;
    if (g.group.find('x') != std::string::npos)
      text = "A=" + g.group + " N=" + std::to_string(g.n_branch) +
             " a=" + g.a;
    else
      text = "m=" + g.group + " N=" + std::to_string(g.n_branch) +
             " a=" + g.a;
    std::string label = "row " + std::to_string(g.index) + " (" + text + ")";
    try {
      auto datum = parse_datum(text);
      std::int64_t genus;
      std::string key;
      if (const auto* c = std::get_if<CyclicCoverDatum>(&datum)) {
        CyclicCoverDatum cf = canonical_form_cyclic(*c);
        genus = genus_cyclic(cf);
        key = group_label(cf) + "|" + std::to_string(cf.branch_count()) +
              "|" + format_monodromy(cf);
      } else {
        AbelianCoverDatum cf =
            canonical_form_abelian(std::get<AbelianCoverDatum>(datum));
        genus = genus_abelian(cf);
        key = group_label(cf) + "|" + std::to_string(cf.branch_count()) +
              "|" + format_monodromy(cf);
      }
      if (genus != g.genus) {
        result.errors.push_back(label + ": genus column says " +
                                std::to_string(g.genus) + " but the datum "
                                "has genus " + std::to_string(genus));
        continue;
      }
      wanted.insert(key);
      if (!produced.count(key)) result.missing.push_back(label);
    } catch (const std::exception& e) {
      result.errors.push_back(label + ": " + e.what());
    }
  }

  for (const auto& row : table.rows) {
    std::string key = key_of_report(row.report);
    if (!wanted.count(key))
      result.extra.push_back("index " + std::to_string(row.index) + " (" +
                             key + ")");
  }
  return result;
}

std::string DiffResult::summary(std::int64_t golden_total) const {
  std::ostringstream out;
  out << "diff: " << (golden_total - static_cast<std::int64_t>(missing.size()))
      << "/" << golden_total << " golden rows matched; " << extra.size()
      << " extra row(s)";
  if (!errors.empty()) out << "; " << errors.size() << " error(s)";
  out << "\n";
  for (const auto& m : missing) out << "missing: " << m << "\n";
  for (const auto& e : extra) out << "extra:   " << e << "\n";
  for (const auto& e : errors) out << "error:   " << e << "\n";
  return out.str();
}

}  // namespace covers
