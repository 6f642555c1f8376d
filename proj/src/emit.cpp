#include "klsb/emit.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace klsb {

namespace {

std::string word_latex(const std::string& w) {
  if (w == "1") return "1";
  std::string out;
  for (char ch : w) {
    out += ch;
    if (ch == 's') out += '_';
  }
  return out;
}

void emit_poly(std::ostringstream& out, const PolyQ& p, const char* pad) {
  out << pad << "\"dim\": [\n";
  bool first = true;
  for (int d = 0; d <= p.degree(); ++d) {
    Rat a = p.coeff(d);
    if (a.is_zero()) continue;
    if (!first) out << ",\n";
    first = false;
    out << pad << "  {\"num\": " << int128_to_string(a.num) << ", \"den\": "
        << int128_to_string(a.den) << ", \"deg\": " << d << "}";
  }
  out << "\n" << pad << "]";
}

void emit_word_list(std::ostringstream& out, const WeylGroup& W, const std::vector<int>& elems) {
  out << "[";
  for (size_t i = 0; i < elems.size(); ++i) {
    if (i) out << ", ";
    out << "\"" << W.word_str(elems[i]) << "\"";
  }
  out << "]";
}

}  // namespace

std::string coord_str(int a, int b) {
  if (a == 0) return std::to_string(b);
  std::string s;
  if (a == -1) s = "-q";
  else if (a == 1) s = "q";
  else s = std::to_string(a) + "q";
  if (b > 0) s += "+" + std::to_string(b);
  if (b < 0) s += std::to_string(b);
  return s;
}

std::vector<int> length_lex_order(const WeylGroup& W) {
  std::vector<int> order(W.n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (W.len[x] != W.len[y]) return W.len[x] < W.len[y];
    return W.words[x] < W.words[y];
  });
  return order;
}

TableFixture table_to_fixture(const std::string& type_label, const WeylGroup& W,
                              const MwTable& tab) {
  TableFixture fx;
  fx.type_label = type_label;
  fx.rank = W.rank;
  for (const MwRow& row : tab.rows) {
    FixtureRow fr;
    fr.w = W.word_str(row.w);
    for (const auto& [key, c] : row.m.t) {
      if (c.is_zero()) continue;
      FixtureTerm t;
      t.coeff = c.as_ll("table coefficient");
      for (int i = 0; i < W.rank; ++i) t.coords.push_back({key.a[i], key.b[i]});
      fr.terms.push_back(std::move(t));
    }
    fx.rows.push_back(std::move(fr));
  }
  return fx;
}

std::string table_json(const std::string& type_label, const WeylGroup& W, const MwTable& tab) {
  std::ostringstream out;
  out << "{\n  \"type_label\": \"" << type_label << "\",\n  \"rank\": " << W.rank
      << ",\n  \"rows\": [\n";
  for (size_t k = 0; k < tab.rows.size(); ++k) {
    const MwRow& row = tab.rows[k];
    out << "    {\n      \"w\": \"" << W.word_str(row.w) << "\",\n      \"len\": "
        << W.len[row.w] << ",\n      \"a\": " << row.a << ",\n      \"duflo\": \""
        << W.word_str(row.duflo) << "\",\n      \"imask\": [";
    bool first = true;
    for (int i = 0; i < W.rank; ++i) {
      if (!((row.imask >> i) & 1u)) continue;
      if (!first) out << ", ";
      first = false;
      out << (i + 1);
    }
    out << "],\n      \"q0\": " << row.q0 << ",\n      \"terms\": [\n";
    size_t nterms = row.m.t.size();
    size_t ti = 0;
    for (const auto& [key, c] : row.m.t) {
      out << "        {\"coeff\": " << c.as_ll("table coefficient") << ", \"coords\": [";
      for (int i = 0; i < W.rank; ++i) {
        if (i) out << ", ";
        out << "[" << key.a[i] << ", " << key.b[i] << "]";
      }
      out << "]}" << (++ti < nterms ? "," : "") << "\n";
    }
    out << "      ],\n";
    emit_poly(out, row.dim, "      ");
    out << "\n    }" << (k + 1 < tab.rows.size() ? "," : "") << "\n";
  }
  out << "  ]\n}\n";
  return out.str();
}

std::string table_tsv(const WeylGroup& W, const MwTable& tab) {
  std::ostringstream out;
  out << "w\tlen\ta\tq0\tterms\n";
  for (const MwRow& row : tab.rows) {
    out << W.word_str(row.w) << "\t" << W.len[row.w] << "\t" << row.a << "\t" << row.q0 << "\t";
    bool first = true;
    for (const auto& [key, c] : row.m.t) {
      if (!first) out << " ";
      first = false;
      out << c.as_ll("table coefficient") << "*(";
      for (int i = 0; i < W.rank; ++i) {
        if (i) out << ",";
        out << coord_str(key.a[i], key.b[i]);
      }
      out << ")";
    }
    out << "\n";
  }
  return out.str();
}

std::string table_latex(const std::string& type_label, const WeylGroup& W, const MwTable& tab) {
  std::ostringstream out;
  out << "% Type " << type_label << "\n\\begin{tabular}{|r|l|}\n\\hline\n$w$ & $M_w$\\\\\n"
      << "\\hline\n";
  for (const MwRow& row : tab.rows) {
    out << "$" << word_latex(W.word_str(row.w)) << "$ & $";
    bool first = true;
    for (const auto& [key, c] : row.m.t) {
      long long v = c.as_ll("table coefficient");
      if (v > 0 && !first) out << "+";
      if (v == -1) out << "-";
      else if (v != 1) out << v;
      first = false;
      out << "V_{";
      for (int i = 0; i < W.rank; ++i) {
        if (i) out << ",";
        out << coord_str(key.a[i], key.b[i]);
      }
      out << "}";
    }
    out << "$\\\\\n";
  }
  out << "\\hline\n\\end{tabular}\n";
  return out.str();
}

std::string cells_json(const std::string& type_label, const WeylGroup& W, const CellData& cd) {
  std::ostringstream out;
  out << "{\n  \"type_label\": \"" << type_label << "\",\n  \"rank\": " << W.rank
      << ",\n  \"order\": " << W.n << ",\n  \"left_cells\": [\n";
  for (size_t c = 0; c < cd.left_cells.size(); ++c) {
    out << "    {\"id\": " << c << ", \"duflo\": \"" << W.word_str(cd.duflo[c])
        << "\", \"members\": ";
    emit_word_list(out, W, cd.left_cells[c]);
    out << "}" << (c + 1 < cd.left_cells.size() ? "," : "") << "\n";
  }
  out << "  ],\n  \"right_cells\": [\n";
  for (size_t c = 0; c < cd.right_cells.size(); ++c) {
    out << "    {\"id\": " << c << ", \"members\": ";
    emit_word_list(out, W, cd.right_cells[c]);
    out << "}" << (c + 1 < cd.right_cells.size() ? "," : "") << "\n";
  }
  out << "  ],\n  \"two_cells\": [\n";
  for (size_t c = 0; c < cd.two_cells.size(); ++c) {
    out << "    {\"id\": " << c << ", \"a\": " << cd.a_two[c] << ", \"members\": ";
    emit_word_list(out, W, cd.two_cells[c]);
    out << "}" << (c + 1 < cd.two_cells.size() ? "," : "") << "\n";
  }
  out << "  ],\n  \"two_leq\": [\n";
  for (size_t c = 0; c < cd.two_leq.size(); ++c) {
    out << "    [";
    for (size_t d = 0; d < cd.two_leq[c].size(); ++d) {
      if (d) out << ", ";
      out << int(cd.two_leq[c][d]);
    }
    out << "]" << (c + 1 < cd.two_leq.size() ? "," : "") << "\n";
  }
  out << "  ]\n}\n";
  return out.str();
}

std::string klpoly_json(const std::string& type_label, const WeylGroup& W, const KLTable& kl) {
  std::ostringstream out;
  out << "{\n  \"type_label\": \"" << type_label << "\",\n  \"rank\": " << W.rank
      << ",\n  \"rows\": [\n";
  std::vector<int> order = length_lex_order(W);
  std::string body;
  bool first = true;
  for (int w : order) {
    for (int x : order) {
      const PolyZ& p = kl.P[w][x];
      if (p.is_zero()) continue;
      if (!first) body += ",\n";
      first = false;
      body += "    {\"w\": \"" + W.word_str(w) + "\", \"x\": \"" + W.word_str(x) + "\", \"p\": [";
      for (int d = 0; d <= p.degree(); ++d) {
        if (d) body += ", ";
        body += std::to_string(p.coeff(d));
      }
      body += "]}";
    }
  }
  out << body << "\n  ]\n}\n";
  return out.str();
}

std::string gamma_json(const std::string& type_label, const WeylGroup& W, const CellData& cd,
                       const std::vector<JCellAlgebra>& algebras) {
  std::ostringstream out;
  out << "{\n  \"type_label\": \"" << type_label << "\",\n  \"rank\": " << W.rank
      << ",\n  \"cells\": [\n";
  for (size_t k = 0; k < algebras.size(); ++k) {
    const JCellAlgebra& J = algebras[k];
    int m = J.m();
    out << "    {\"cell\": " << J.cell << ", \"a\": " << cd.a_two[J.cell] << ", \"elems\": ";
    emit_word_list(out, W, J.elems);
    out << ",\n     \"products\": [\n";
    std::string body;
    bool first = true;
    for (int wi = 0; wi < m; ++wi) {
      for (int xi = 0; xi < m; ++xi) {
        for (int ui = 0; ui < m; ++ui) {
          long long v = J.right_mat[wi][xi * m + ui];
          if (v == 0) continue;
          if (!first) body += ",\n";
          first = false;
          body += "       {\"x\": \"" + W.word_str(J.elems[xi]) + "\", \"w\": \"" +
                  W.word_str(J.elems[wi]) + "\", \"u\": \"" + W.word_str(J.elems[ui]) +
                  "\", \"c\": " + std::to_string(v) + "}";
        }
      }
    }
    out << body << "\n     ]}" << (k + 1 < algebras.size() ? "," : "") << "\n";
  }
  out << "  ]\n}\n";
  return out.str();
}

std::string dims_json(const std::string& type_label, const WeylGroup& W, const MwAll& all) {
  DimsFixture fx;
  fx.type_label = type_label;
  fx.rank = W.rank;
  for (int w : length_lex_order(W)) {
    DimsRow row;
    row.w = W.word_str(w);
    row.poly = all.dim[w];
    fx.rows.push_back(std::move(row));
  }
  return dims_fixture_json(fx);
}

namespace {

std::string term_str(int rank, const QWeight& key, const Rat& c) {
  std::string s = c.str() + "*(";
  for (int i = 0; i < rank; ++i) {
    if (i) s += ",";
    s += coord_str(key.a[i], key.b[i]);
  }
  return s + ")";
}

std::string term_map_str(int rank, const std::map<QWeight, Rat>& m) {
  if (m.empty()) return "0";
  std::string s;
  for (const auto& [key, c] : m) {
    if (!s.empty()) s += " ";
    s += term_str(rank, key, c);
  }
  return s;
}

// Fixture terms as a merged map; duplicate spellings add up, so comparison
// is exact term-multiset equality.
std::map<QWeight, Rat> fixture_term_map(int rank, const std::vector<FixtureTerm>& terms) {
  std::map<QWeight, Rat> m;
  for (const FixtureTerm& t : terms) {
    QWeight key;
    key.r = rank;
    for (int i = 0; i < rank; ++i) {
      key.a[i] = t.coords[i][0];
      key.b[i] = t.coords[i][1];
    }
    Rat& c = m[key];
    c += Rat(t.coeff);
    if (c.is_zero()) m.erase(key);
  }
  return m;
}

bool term_maps_equal(const std::map<QWeight, Rat>& got, const VCombo& want) {
  if (got.size() != want.t.size()) return false;
  auto it = want.t.begin();
  for (const auto& [key, c] : got) {
    if (!(it->first == key) || it->second != c) return false;
    ++it;
  }
  return true;
}

}  // namespace

FixtureDiff compare_table_fixture(const WeylGroup& W, const MwTable& tab,
                                  const TableFixture& fx) {
  FixtureDiff diff;
  if (fx.rank != W.rank) {
    diff.lines.push_back("rank mismatch: fixture " + std::to_string(fx.rank) + " vs group " +
                         std::to_string(W.rank));
    return diff;
  }
  std::vector<int> row_of(W.n, -1);
  for (size_t k = 0; k < tab.rows.size(); ++k) row_of[tab.rows[k].w] = int(k);

  std::vector<char> seen(W.n, 0);
  for (const FixtureRow& fr : fx.rows) {
    int w = W.parse_word(fr.w);
    if (w < 0) {
      diff.lines.push_back("row " + fr.w + ": not a word in the generators");
      continue;
    }
    if (seen[w]) {
      diff.lines.push_back("row " + fr.w + ": duplicate element");
      continue;
    }
    seen[w] = 1;
    if (row_of[w] < 0) {
      diff.lines.push_back("row " + fr.w + ": element is not in the table domain");
      continue;
    }
    const MwRow& row = tab.rows[row_of[w]];
    auto want = fixture_term_map(fx.rank, fr.terms);
    if (!term_maps_equal(want, row.m)) {
      diff.lines.push_back("M_" + fr.w + ": computed " + term_map_str(W.rank, row.m.t) +
                           " ; fixture " + term_map_str(W.rank, want));
    }
  }
  for (const MwRow& row : tab.rows)
    if (!seen[row.w])
      diff.lines.push_back("table row " + W.word_str(row.w) + " missing from the fixture");
  return diff;
}

FixtureDiff compare_dims_fixture(KLSBasis& B, const DimsFixture& fx) {
  FixtureDiff diff;
  const WeylGroup& W = *B.W;
  if (fx.rank != W.rank) {
    diff.lines.push_back("rank mismatch: fixture " + std::to_string(fx.rank) + " vs group " +
                         std::to_string(W.rank));
    return diff;
  }
  for (const DimsRow& fr : fx.rows) {
    int w = W.parse_word(fr.w);
    if (w < 0) {
      diff.lines.push_back("dims row " + fr.w + ": not a word in the generators");
      continue;
    }
    VCombo m = compute_mw_one(B, w);
    PolyQ p = dimension_polynomial(*B.rs, m);
    if (!(p == fr.poly)) {
      diff.lines.push_back("dim M_" + fr.w + ": computed " + p.str() + " ; fixture " +
                           fr.poly.str());
    }
  }
  return diff;
}

FixtureDiff compare_positivity_fixture(KLSBasis& B, const PositivityFixture& fx) {
  FixtureDiff diff;
  const WeylGroup& W = *B.W;
  if (fx.rank != W.rank) {
    diff.lines.push_back("rank mismatch: fixture " + std::to_string(fx.rank) + " vs group " +
                         std::to_string(W.rank));
    return diff;
  }
  int w = W.parse_word(fx.w);
  if (w < 0) {
    diff.lines.push_back("positivity row " + fx.w + ": not a word in the generators");
    return diff;
  }
  VCombo m = compute_mw_one(B, w);
  auto want = fixture_term_map(fx.rank, fx.terms);
  if (!term_maps_equal(want, m)) {
    diff.lines.push_back("M_" + fx.w + " (" + fx.type_label + "): computed " +
                         term_map_str(W.rank, m.t) + " ; fixture " +
                         term_map_str(W.rank, want));
  }
  return diff;
}

std::string cwchi_json(const std::string& type_label, const WeylGroup& W, const CellData& cd,
                       const CharTable& T, const std::vector<CwChi>& per_cell) {
  std::ostringstream out;
  out << "{\n  \"type_label\": \"" << type_label << "\",\n  \"rank\": " << W.rank
      << ",\n  \"classes\": [";
  for (int i = 0; i < T.k; ++i) {
    if (i) out << ", ";
    out << "{\"rep\": \"" << W.word_str(W.class_rep[i]) << "\", \"size\": " << T.class_size[i]
        << "}";
  }
  out << "],\n  \"chars\": [\n";
  for (int r = 0; r < T.k; ++r) {
    out << "    {\"degree\": " << T.degree(r) << ", \"values\": [";
    for (int i = 0; i < T.k; ++i) {
      if (i) out << ", ";
      out << "\"" << T.chi[r][i].str() << "\"";
    }
    out << "]}" << (r + 1 < T.k ? "," : "") << "\n";
  }
  out << "  ],\n  \"cells\": [\n";
  for (size_t k = 0; k < per_cell.size(); ++k) {
    const CwChi& C = per_cell[k];
    out << "    {\"cell\": " << C.cell << ", \"a\": " << cd.a_two[C.cell]
        << ",\n     \"left_mult\": [";
    for (int r = 0; r < T.k; ++r) {
      if (r) out << ", ";
      out << "\"" << C.left_mult[r].str() << "\"";
    }
    out << "],\n     \"rows\": [\n";
    for (size_t wi = 0; wi < C.elems.size(); ++wi) {
      out << "       {\"w\": \"" << W.word_str(C.elems[wi]) << "\", \"c\": [";
      for (int r = 0; r < T.k; ++r) {
        if (r) out << ", ";
        out << "\"" << C.c[wi][r].str() << "\"";
      }
      out << "]}" << (wi + 1 < C.elems.size() ? "," : "") << "\n";
    }
    out << "     ]}" << (k + 1 < per_cell.size() ? "," : "") << "\n";
  }
  out << "  ]\n}\n";
  return out.str();
}

}  // namespace klsb
