#pragma once

#include <array>
#include <string>
#include <vector>

#include "klsb/poly.hpp"

namespace klsb {

// Golden-table file formats. A table fixture pins the Weyl-character
// expansion of every M_w over {w : w ~L w^{-1}} for one type; terms are
// signed multiples of V_{a_1 q + b_1, ..., a_r q + b_r}, stored verbatim.
// Loading never merges, reorders, or renormalizes terms, so a fixture can
// pin a spelling like V_{q,0,q-3} exactly as written.

struct FixtureTerm {
  long long coeff = 0;
  std::vector<std::array<int, 2>> coords;  // (a, b) per fundamental weight
};

struct FixtureRow {
  std::string w;  // reduced word, e.g. "s2s3s2"; "1" for the identity
  std::vector<FixtureTerm> terms;
  std::vector<FixtureTerm> lterms;  // optional irreducible-basis column
  bool has_lterms = false;
};

struct TableFixture {
  std::string type_label;
  int rank = 0;
  std::vector<FixtureRow> rows;
};

// Dimension-polynomial fixture; rows may name arbitrary group elements.
struct DimsRow {
  std::string w;
  PolyQ poly;
};

struct DimsFixture {
  std::string type_label;
  int rank = 0;
  std::vector<DimsRow> rows;
};

// A pinned (type, w) pair carrying both the Weyl-character expansion and
// the expansion into irreducibles. The lterms side is reference data; the
// engine checks the terms side and round-trips both.
struct PositivityFixture {
  std::string type_label;
  int rank = 0;
  std::string w;
  std::vector<FixtureTerm> terms;
  std::vector<FixtureTerm> lterms;
};

// Loaders throw std::runtime_error with a one-line description on any
// malformed input: unreadable file, bad JSON, wrong coord arity, pairs that
// are not pairs, zero or non-integer coefficients, empty words or rows.
TableFixture load_table_fixture(const std::string& path);
DimsFixture load_dims_fixture(const std::string& path);
std::vector<PositivityFixture> load_positivity_fixtures(const std::string& path);

// Canonical serializations. Serializing a loaded fixture is idempotent:
// load(emit(load(f))) == load(f) and emit . load fixes its own output, so
// fixtures survive a loader+emitter round trip unchanged.
std::string table_fixture_json(const TableFixture& fx);
std::string dims_fixture_json(const DimsFixture& fx);
std::string positivity_fixtures_json(const std::vector<PositivityFixture>& fxs);

bool operator==(const FixtureTerm& x, const FixtureTerm& y);
bool operator==(const FixtureRow& x, const FixtureRow& y);
bool operator==(const TableFixture& x, const TableFixture& y);
bool operator==(const DimsRow& x, const DimsRow& y);
bool operator==(const DimsFixture& x, const DimsFixture& y);
bool operator==(const PositivityFixture& x, const PositivityFixture& y);

}  // namespace klsb
