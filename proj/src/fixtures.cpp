#include "klsb/fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "klsb/rational.hpp"

namespace klsb {

namespace {

using nlohmann::json;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::runtime_error("bad JSON in " + path + ": " + e.what());
  }
  return j;
}

long long as_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw std::runtime_error("expected an integer for " + what);
  return j.get<long long>();
}

std::string as_word(const json& j, const std::string& what) {
  if (!j.is_string() || j.get<std::string>().empty())
    throw std::runtime_error("expected a nonempty word string for " + what);
  return j.get<std::string>();
}

std::vector<FixtureTerm> parse_terms(const json& j, int rank, const std::string& where) {
  if (!j.is_array() || j.empty())
    throw std::runtime_error(where + " must be a nonempty term array");
  std::vector<FixtureTerm> out;
  for (const json& t : j) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("coords"))
      throw std::runtime_error("term of " + where + " must carry coeff and coords");
    FixtureTerm term;
    term.coeff = as_int(t["coeff"], "coeff of " + where);
    if (term.coeff == 0) throw std::runtime_error("zero coefficient in " + where);
    const json& cs = t["coords"];
    if (!cs.is_array() || int(cs.size()) != rank)
      throw std::runtime_error("coords of " + where + " must list exactly rank pairs");
    for (const json& c : cs) {
      if (!c.is_array() || c.size() != 2)
        throw std::runtime_error("coord of " + where + " must be a pair [a, b]");
      long long a = as_int(c[0], "coord of " + where);
      long long b = as_int(c[1], "coord of " + where);
      term.coords.push_back({int(a), int(b)});
    }
    out.push_back(std::move(term));
  }
  return out;
}

std::pair<std::string, int> parse_header(const json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("type_label") || !j.contains("rank"))
    throw std::runtime_error(path + ": fixture must carry type_label and rank");
  std::string label = as_word(j["type_label"], "type_label");
  int rank = int(as_int(j["rank"], "rank"));
  if (rank < 1 || rank > 4) throw std::runtime_error(path + ": rank out of range");
  return {label, rank};
}

PolyQ parse_poly(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty())
    throw std::runtime_error(where + " must be a nonempty coefficient array");
  PolyQ p;
  for (const json& t : j) {
    if (!t.is_object() || !t.contains("num") || !t.contains("den") || !t.contains("deg"))
      throw std::runtime_error("poly term of " + where + " must carry num, den, deg");
    long long num = as_int(t["num"], "num of " + where);
    long long den = as_int(t["den"], "den of " + where);
    int deg = int(as_int(t["deg"], "deg of " + where));
    if (den <= 0 || deg < 0) throw std::runtime_error("bad poly term in " + where);
    if (deg >= int(p.c.size())) p.c.resize(deg + 1, Rat(0));
    if (!p.c[deg].is_zero()) throw std::runtime_error("duplicate degree in " + where);
    p.c[deg] = Rat::frac(num, den);
  }
  p.trim();
  return p;
}

void emit_terms(std::ostringstream& out, const std::vector<FixtureTerm>& terms,
                const char* key, const char* pad) {
  out << pad << "\"" << key << "\": [\n";
  for (size_t k = 0; k < terms.size(); ++k) {
    out << pad << "  {\"coeff\": " << terms[k].coeff << ", \"coords\": [";
    for (size_t i = 0; i < terms[k].coords.size(); ++i) {
      if (i) out << ", ";
      out << "[" << terms[k].coords[i][0] << ", " << terms[k].coords[i][1] << "]";
    }
    out << "]}" << (k + 1 < terms.size() ? "," : "") << "\n";
  }
  out << pad << "]";
}

}  // namespace

TableFixture load_table_fixture(const std::string& path) {
  json j = read_json_file(path);
  TableFixture fx;
  std::tie(fx.type_label, fx.rank) = parse_header(j, path);
  if (!j.contains("rows") || !j["rows"].is_array() || j["rows"].empty())
    throw std::runtime_error(path + ": fixture must carry a nonempty rows array");
  for (const json& r : j["rows"]) {
    if (!r.is_object() || !r.contains("w") || !r.contains("terms"))
      throw std::runtime_error(path + ": each row must carry w and terms");
    FixtureRow row;
    row.w = as_word(r["w"], "row word");
    row.terms = parse_terms(r["terms"], fx.rank, "row " + row.w + " of " + path);
    if (r.contains("lterms")) {
      row.has_lterms = true;
      row.lterms = parse_terms(r["lterms"], fx.rank, "lterms of row " + row.w + " of " + path);
    }
    fx.rows.push_back(std::move(row));
  }
  return fx;
}

DimsFixture load_dims_fixture(const std::string& path) {
  json j = read_json_file(path);
  DimsFixture fx;
  std::tie(fx.type_label, fx.rank) = parse_header(j, path);
  if (!j.contains("rows") || !j["rows"].is_array() || j["rows"].empty())
    throw std::runtime_error(path + ": fixture must carry a nonempty rows array");
  for (const json& r : j["rows"]) {
    if (!r.is_object() || !r.contains("w") || !r.contains("poly"))
      throw std::runtime_error(path + ": each dims row must carry w and poly");
    DimsRow row;
    row.w = as_word(r["w"], "dims row word");
    row.poly = parse_poly(r["poly"], "row " + row.w + " of " + path);
    fx.rows.push_back(std::move(row));
  }
  return fx;
}

std::vector<PositivityFixture> load_positivity_fixtures(const std::string& path) {
  json j = read_json_file(path);
  if (!j.is_object() || !j.contains("fixtures") || !j["fixtures"].is_array() ||
      j["fixtures"].empty())
    throw std::runtime_error(path + ": must carry a nonempty fixtures array");
  std::vector<PositivityFixture> out;
  for (const json& r : j["fixtures"]) {
    PositivityFixture fx;
    std::tie(fx.type_label, fx.rank) = parse_header(r, path);
    if (!r.contains("w") || !r.contains("terms") || !r.contains("lterms"))
      throw std::runtime_error(path + ": each positivity fixture carries w, terms, lterms");
    fx.w = as_word(r["w"], "positivity word");
    fx.terms = parse_terms(r["terms"], fx.rank, "terms of " + fx.w + " in " + path);
    fx.lterms = parse_terms(r["lterms"], fx.rank, "lterms of " + fx.w + " in " + path);
    out.push_back(std::move(fx));
  }
  return out;
}

std::string table_fixture_json(const TableFixture& fx) {
  std::ostringstream out;
  out << "{\n  \"type_label\": \"" << fx.type_label << "\",\n  \"rank\": " << fx.rank
      << ",\n  \"rows\": [\n";
  for (size_t k = 0; k < fx.rows.size(); ++k) {
    const FixtureRow& row = fx.rows[k];
    out << "    {\n      \"w\": \"" << row.w << "\",\n";
    emit_terms(out, row.terms, "terms", "      ");
    if (row.has_lterms) {
      out << ",\n";
      emit_terms(out, row.lterms, "lterms", "      ");
    }
    out << "\n    }" << (k + 1 < fx.rows.size() ? "," : "") << "\n";
  }
  out << "  ]\n}\n";
  return out.str();
}

std::string dims_fixture_json(const DimsFixture& fx) {
  std::ostringstream out;
  out << "{\n  \"type_label\": \"" << fx.type_label << "\",\n  \"rank\": " << fx.rank
      << ",\n  \"rows\": [\n";
  for (size_t k = 0; k < fx.rows.size(); ++k) {
    const DimsRow& row = fx.rows[k];
    out << "    {\n      \"w\": \"" << row.w << "\",\n      \"poly\": [\n";
    bool first = true;
    for (int d = 0; d <= row.poly.degree(); ++d) {
      Rat a = row.poly.coeff(d);
      if (a.is_zero()) continue;
      if (!first) out << ",\n";
      first = false;
      out << "        {\"num\": " << int128_to_string(a.num) << ", \"den\": "
          << int128_to_string(a.den) << ", \"deg\": " << d << "}";
    }
    out << "\n      ]\n    }" << (k + 1 < fx.rows.size() ? "," : "") << "\n";
  }
  out << "  ]\n}\n";
  return out.str();
}

std::string positivity_fixtures_json(const std::vector<PositivityFixture>& fxs) {
  std::ostringstream out;
  out << "{\n  \"fixtures\": [\n";
  for (size_t k = 0; k < fxs.size(); ++k) {
    const PositivityFixture& fx = fxs[k];
    out << "    {\n      \"type_label\": \"" << fx.type_label << "\",\n      \"rank\": "
        << fx.rank << ",\n      \"w\": \"" << fx.w << "\",\n";
    emit_terms(out, fx.terms, "terms", "      ");
    out << ",\n";
    emit_terms(out, fx.lterms, "lterms", "      ");
    out << "\n    }" << (k + 1 < fxs.size() ? "," : "") << "\n";
  }
  out << "  ]\n}\n";
  return out.str();
}

bool operator==(const FixtureTerm& x, const FixtureTerm& y) {
  return x.coeff == y.coeff && x.coords == y.coords;
}

bool operator==(const FixtureRow& x, const FixtureRow& y) {
  return x.w == y.w && x.has_lterms == y.has_lterms && x.terms == y.terms &&
         x.lterms == y.lterms;
}

bool operator==(const TableFixture& x, const TableFixture& y) {
  return x.type_label == y.type_label && x.rank == y.rank && x.rows == y.rows;
}

bool operator==(const DimsRow& x, const DimsRow& y) { return x.w == y.w && x.poly == y.poly; }

bool operator==(const DimsFixture& x, const DimsFixture& y) {
  return x.type_label == y.type_label && x.rank == y.rank && x.rows == y.rows;
}

bool operator==(const PositivityFixture& x, const PositivityFixture& y) {
  return x.type_label == y.type_label && x.rank == y.rank && x.w == y.w && x.terms == y.terms &&
         x.lterms == y.lterms;
}

}  // namespace klsb
