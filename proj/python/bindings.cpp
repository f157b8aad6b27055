#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "weilrep/curves.hpp"
#include "weilrep/errors.hpp"
#include "weilrep/io.hpp"
#include "weilrep/reconstruct.hpp"
#include "weilrep/rootnumbers.hpp"

namespace py = pybind11;
using namespace weilrep;

namespace {

py::dict factor_dict(const EulerFactor& f) {
    py::dict d;
    d["polynomial"] = f.poly.pretty();
    if (f.roots) {
        py::list roots;
        for (const auto& r : f.roots->roots()) roots.append(r.str());
        d["roots"] = roots;
    } else {
        d["roots"] = py::none();
    }
    return d;
}

io::RepFile read_rep(const std::string& text) { return io::parse_rep(io::parse_document(text)); }

py::dict euler(const std::string& rep_text, const std::string& descriptor) {
    io::RepFile file = read_rep(rep_text);
    FieldDescriptor field = io::parse_descriptor(file.rep.quotient(), descriptor);
    EulerFactor f = file.monodromy ? wd_euler_factor({file.rep, *file.monodromy}, field) : euler_factor(file.rep, field);
    py::dict d = factor_dict(f);
    d["descriptor"] = field.str();
    return d;
}

py::dict reconstruct_table(const std::string& table_text) {
    TableOracle table = io::parse_table(io::parse_document(table_text));
    ReconstructionResult r = reconstruct(table, table.quotient());
    py::list queries;
    for (const auto& q : r.query_log) queries.append(py::make_tuple(q.field.str(), q.answer.poly.pretty()));
    py::dict d;
    d["rep"] = io::print_document(io::rep_document(r.rep));
    d["queries"] = queries;
    return d;
}

bool roundtrip(const std::string& rep_text) {
    WeilRep rep = read_rep(rep_text).rep;
    return equal(reconstruct(RepOracle(rep), rep.quotient()).rep, canonical_decomposition(rep));
}

std::pair<int, int> corpus_roundtrip(std::uint64_t seed, int count) {
    int pass = 0;
    auto corpus = generate_corpus(seed, count);
    for (const auto& rep : corpus) {
        if (equal(reconstruct(RepOracle(rep), rep.quotient()).rep, canonical_decomposition(rep))) ++pass;
    }
    return {pass, static_cast<int>(corpus.size())};
}

std::vector<std::pair<long, long>> count_points(const std::string& curve_text, int degree, bool affine) {
    io::CurveSpec spec = io::parse_curve(io::parse_document(curve_text));
    std::vector<std::pair<long, long>> out;
    for (const auto& c : io::curve_counts(spec, degree, affine ? CountMode::affine_only : CountMode::projective)) {
        out.emplace_back(c.q, c.count);
    }
    return out;
}

py::dict stoll(const std::vector<long>& coeffs) {
    StollVerdict v = stoll_criterion(int_poly(coeffs));
    py::list offending;
    for (const auto& g : v.constant_term_one) offending.append(int_poly_str(g));
    py::dict d;
    d["holds"] = v.holds();
    d["resultant"] = int_poly_str(v.resultant);
    d["factorization"] = v.factorization.monic_str();
    d["constant_term_one"] = offending;
    return d;
}

int twist_root_number(bool trivial, int chi_minus_one) {
    if (chi_minus_one != 1 && chi_minus_one != -1) throw DomainError("chi(-1) must be 1 or -1");
    QuadCharDatum chi{trivial, chi_minus_one};
    Cyclotomic w = j_twist_root_number(chi).value;
    if (w == Cyclotomic(1)) return 1;
    if (w == Cyclotomic(-1)) return -1;
    throw DomainError("root number " + w.str() + " is not real");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact local Euler factors, reconstruction and curve counts";

    // Translators run newest first, so the subclass is registered last.
    auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", domain.ptr());
    py::register_exception<VerificationError>(m, "VerificationError", PyExc_RuntimeError);

    m.def("euler_factor", &euler, py::arg("rep"), py::arg("descriptor"),
          "Local polynomial of a rep document over a descriptor (desc(...), base or top).");
    m.def("reconstruct", &reconstruct_table, py::arg("table"),
          "Reconstruct a rep from an oracle-table document; returns the rep document and the queries made.");
    m.def("roundtrip", &roundtrip, py::arg("rep"));
    m.def("corpus_roundtrip", &corpus_roundtrip, py::arg("seed"), py::arg("count") = 200,
          "Round trip a random corpus; returns (passed, total).");
    m.def("count_points", &count_points, py::arg("curve"), py::arg("degree") = 1, py::arg("affine") = false,
          "(q, N) over F_q, F_q^2, ... for a curve document.");
    m.def(
        "zeta", [](const std::string& text) { return factor_dict(io::curve_zeta(io::parse_curve(io::parse_document(text)))); },
        py::arg("curve"));
    m.def("stoll", &stoll, py::arg("coeffs"), "Stoll criterion for an integer quartic, constant term first.");
    m.def("twist_root_number", &twist_root_number, py::arg("trivial"), py::arg("chi_minus_one"));
    m.def("fixture_names", &io::catalog_names);
    m.def("fixture", &io::catalog_document, py::arg("name"));
    m.def(
        "reprint", [](const std::string& text) { return io::reprint(text); }, py::arg("text"));
}
