#pragma once

#include <string>
#include <vector>

#include "klsb/cells.hpp"
#include "klsb/char_table.hpp"
#include "klsb/fixtures.hpp"
#include "klsb/hecke.hpp"
#include "klsb/kl.hpp"
#include "klsb/mw.hpp"
#include "klsb/weyl_group.hpp"

namespace klsb {

// One table coordinate a q + b rendered canonically:
// "0", "2", "q", "q-3", "q+1", "2q-3".
std::string coord_str(int a, int b);

// The computed table converted to the fixture schema: one row per
// w ~L w^{-1} in (length, lex word) order, terms in straightened-key order,
// coefficients exact integers.
TableFixture table_to_fixture(const std::string& type_label, const WeylGroup& W,
                              const MwTable& tab);

// Emitters. Output is deterministic byte for byte: fixed key order, fixed
// whitespace, exact integers and rationals, no floats anywhere.
std::string table_json(const std::string& type_label, const WeylGroup& W, const MwTable& tab);
std::string table_tsv(const WeylGroup& W, const MwTable& tab);
std::string table_latex(const std::string& type_label, const WeylGroup& W, const MwTable& tab);

std::string cells_json(const std::string& type_label, const WeylGroup& W, const CellData& cd);
std::string klpoly_json(const std::string& type_label, const WeylGroup& W, const KLTable& kl);
std::string gamma_json(const std::string& type_label, const WeylGroup& W, const CellData& cd,
                       const std::vector<JCellAlgebra>& algebras);
std::string dims_json(const std::string& type_label, const WeylGroup& W, const MwAll& all);
std::string cwchi_json(const std::string& type_label, const WeylGroup& W, const CellData& cd,
                       const CharTable& T, const std::vector<CwChi>& per_cell);

// Group elements in (length, lex canonical word) order; the row order used
// by every emitter.
std::vector<int> length_lex_order(const WeylGroup& W);

// Fixture-versus-engine comparisons. Every mismatch contributes one line;
// values are compared exactly (term multisets with integer coefficients,
// rational polynomial coefficients).
struct FixtureDiff {
  std::vector<std::string> lines;
  bool ok() const { return lines.empty(); }
};

// The fixture rows must cover exactly the table domain {w : w ~L w^{-1}}
// and each row's term multiset must equal the computed expansion.
FixtureDiff compare_table_fixture(const WeylGroup& W, const MwTable& tab,
                                  const TableFixture& fx);

// Dimension polynomials for the fixture's rows (arbitrary elements).
FixtureDiff compare_dims_fixture(KLSBasis& B, const DimsFixture& fx);

// The Weyl-character side of a pinned positivity identity.
FixtureDiff compare_positivity_fixture(KLSBasis& B, const PositivityFixture& fx);

}  // namespace klsb
