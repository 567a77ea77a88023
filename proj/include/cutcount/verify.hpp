#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cutcount/extremal.hpp"
#include "cutcount/families.hpp"

namespace cutcount {

enum class Outcome { Pass, Fail, Flag };

std::string_view to_string(Outcome outcome);

struct VerifyItem {
  std::string name;
  Outcome outcome = Outcome::Pass;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  std::vector<VerifyItem> items;

  /// True when no item failed; flagged items do not fail the suite.
  bool passed() const;
  /// One "PASS|FAIL|FLAG <name>: <detail>" line per item.
  std::string to_text() const;
  void append(const VerifyReport& other);
};

/// A cell of the minimum-F table over graphs with n vertices, k cut vertices
/// and girth at least k.
struct TableCell {
  int n = 0;
  int k = 0;
  /// Printed minimizer; empty for cells stating that no graph exists.
  std::optional<FamilySpec> graph;
  int value = 0;
  /// Cells whose printed path has fewer than n vertices.
  bool path_mismatch = false;
};

/// All 42 cells, rows n = 12 down to 6, columns k = 1..6.
const std::vector<TableCell>& table1_cells();

/// The class a cell refers to: n vertices, k cut vertices, girth >= k.
ClassSpec cell_class(const TableCell& cell);

/// Tier (a): F of every printed graph. Tier (b): exhaustive search for cells
/// with n <= search_n_max.
VerifyReport verify_table1(int search_n_max = 9, SearchOptions options = {});

/// Theorem identifiers accepted by verify_theorem, in suite order.
const std::vector<std::string>& theorem_ids();

/// Throws std::invalid_argument for an unknown id. Ranges are the theorem's
/// default ranges clipped to n <= n_max.
VerifyReport verify_theorem(std::string_view id, int n_max = 9, SearchOptions options = {});
VerifyReport verify_theorems(int n_max = 9, SearchOptions options = {});

/// Closed forms against decomposition and brute force for every family
/// instance with at most n_max vertices.
VerifyReport verify_formulas(int n_max = 12);

}  // namespace cutcount
