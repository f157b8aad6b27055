#pragma once

// Line-oriented text formats.  Every document starts with
// `weilrep v1 <kind>` followed by `key value` lines; blank lines and lines
// starting with '#' are ignored.  Printing is canonical, so
// print(parse(print(x))) == print(x) byte for byte.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weilrep/curves.hpp"
#include "weilrep/oracle.hpp"
#include "weilrep/reconstruct.hpp"
#include "weilrep/rootnumbers.hpp"
#include "weilrep/weilrep.hpp"

namespace weilrep::io {

inline constexpr std::string_view kHeader = "weilrep v1";

struct Line {
    std::string key;
    std::string value;
    int number = 0;
};

struct Document {
    std::string kind;
    std::vector<Line> lines;

    void add(std::string key, std::string value = "") { lines.push_back({std::move(key), std::move(value), 0}); }
    std::vector<const Line*> all(std::string_view key) const;
    /// Exactly one line with this key; ParseError otherwise.
    const Line& one(std::string_view key) const;
    const Line* find(std::string_view key) const;
};

Document parse_document(std::string_view text);
std::string print_document(const Document& doc);
/// ParseError unless the document has the given kind.
void expect_kind(const Document& doc, std::string_view kind);

std::string print_cycles(const std::vector<int>& perm);
Matrix parse_matrix(std::string_view text);

Document group_document(const GroupPtr& group);
GroupPtr parse_group(const Document& doc);

Document quotient_document(const QuotientPtr& quotient);
QuotientPtr parse_quotient(const Document& doc);

/// `desc(M; (word,m), ...)`, `base` or `top`.
FieldDescriptor parse_descriptor(const QuotientPtr& quotient, std::string_view text);

struct RepFile {
    WeilRep rep;
    std::optional<Matrix> monodromy;
};

Document rep_document(const WeilRep& rep, const std::optional<Matrix>& monodromy = std::nullopt);
RepFile parse_rep(const Document& doc);

Document table_document(const TableOracle& table);
TableOracle parse_table(const Document& doc);

struct CurveSpec {
    enum class Model { elliptic, hyperelliptic, node_fiber };
    Model model = Model::elliptic;
    long p = 3;
    int k = 1;
    EllipticCurve elliptic;
    HyperellipticCurve hyperelliptic;
    int nodes = 0;
};

Document curve_document(const CurveSpec& spec);
CurveSpec parse_curve(const Document& doc);

struct PointCount {
    long q = 0;
    long count = 0;
};
/// Counts over F_{q^i} for i = 1..degree, q = p^k.
std::vector<PointCount> curve_counts(const CurveSpec& spec, int degree, CountMode mode = CountMode::projective);
/// Local factor over F_q: 1 - aT + qT^2 for elliptic curves, the genus-2
/// quartic from N1 and N2, and (1 - T)^nodes for a split node fiber.
EulerFactor curve_zeta(const CurveSpec& spec);

Document root_data_document(const TwistData& data);
TwistData parse_root_data(const Document& doc);

/// One `query <desc> | <poly>` line per logged query.
Document query_log_document(const std::vector<QueryRecord>& log);

/// Parses the text and dispatches on its kind; used by the round-trip check.
std::string reprint(std::string_view text);

/// Names of the built-in documents: fixture reps, quotients, tables, curves
/// and root data.
std::vector<std::string> catalog_names();
/// Printed document for a catalog name; DomainError if unknown.
std::string catalog_document(const std::string& name);

}  // namespace weilrep::io
