#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "distspec/canonical.hpp"
#include "distspec/classifier.hpp"
#include "distspec/family.hpp"
#include "distspec/rational.hpp"

namespace distspec {

struct OrderRecord {
  int order;
  int connected_count;  // isomorphism classes
  int in_family_count;  // structural verdict true
  int below_count;      // certified spectral verdicts
  int at_threshold_count;
  int above_count;
  std::vector<std::string> agreement_failures;  // graph6
};

struct CensusReport {
  int max_order;
  int workers;
  std::vector<OrderRecord> per_order;  // orders 1..max_order; order 1 is not classified
  std::chrono::duration<double> elapsed;

  int total_connected() const;
  bool verified() const;
};

struct VerifyOptions {
  int workers = 1;
  int cap = kDefaultEnumerationCap;
};

/// Classifies every connected graph of order 2..max_n both ways and collects
/// disagreements. Work is striped over workers by enumeration index, so the
/// report does not depend on the worker count. Throws std::invalid_argument if
/// max_n is outside 2..cap.
CensusReport verify_theorem(int max_n, const VerifyOptions& options = {});

/// A decimal as printed, with its exact value and number of decimals.
struct PrintedValue {
  std::string text;
  Rational value;
  int decimals;
};
PrintedValue printed(const std::string& text);

struct PrecisionCheck {
  bool matches;        // whole enclosure within half a unit of the last printed digit
  std::string rendered;  // enclosure midpoint rounded half away from zero
  bool near_rounding_boundary;  // within 5% of a unit of a rounding boundary
};
PrecisionCheck check_printed(const Interval& enclosure, const PrintedValue& value);

struct TableRow {
  int table;  // 1..4
  CliqueJoinSpec spec;
  PrintedValue reference;
  Interval enclosure;
  PrecisionCheck check;
};

/// lambda_2 for every row of the reference tables of the families
/// [1,2,4,n4], [1,2,5,n4], [1,3,3,n4] and [2,2,2,n4], certified to width 1e-9.
std::vector<TableRow> reproduce_tables();

/// a + b * sqrt(radicand)
struct QuadraticSurd {
  Rational a;
  Rational b;
  long radicand;
  std::string text;

  double approx() const;
  /// Exact comparison against a rational.
  int compare(const Rational& q) const;
};

struct Anchor {
  std::string description;
  std::string graph6;
  int k;  // eigenvalue index
  std::optional<PrintedValue> reference;
  std::optional<QuadraticSurd> closed_form;
  Interval enclosure;
  bool matches;  // printed precision and/or exact containment of the closed form
  std::optional<PrecisionCheck> check;
};

/// The 15 decimal eigenvalue anchors plus exact small-graph closed forms.
std::vector<Anchor> anchor_eigenvalues();

}  // namespace distspec
