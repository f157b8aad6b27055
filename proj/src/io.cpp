#include "weilrep/io.hpp"

#include <sstream>

#include "weilrep/errors.hpp"
#include "weilrep/text.hpp"

namespace weilrep::io {

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

long parse_long_at(std::string_view s, const Line& line) {
    try {
        return text::parse_long(s);
    } catch (const ParseError& e) {
        throw ParseError(e.what(), line.number);
    }
}

template <typename F>
auto at_line(const Line& line, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const ParseError& e) {
        if (e.line() > 0) throw;
        throw ParseError(std::string(line.key) + ": " + e.what(), line.number);
    } catch (const DomainError& e) {
        throw ParseError(std::string(line.key) + ": " + e.what(), line.number);
    }
}

std::vector<long> parse_longs(const Line& line) {
    std::vector<long> out;
    for (const auto& t : text::tokens(line.value)) out.push_back(parse_long_at(t, line));
    return out;
}

std::string print_longs(const std::vector<long>& v) {
    std::vector<std::string> parts;
    for (long x : v) parts.push_back(std::to_string(x));
    return join(parts, " ");
}

std::string value_str(const Cyclotomic& c) { return c.is_rational() ? c.to_rational().get_str() : c.str(); }

// Greedy generating set of a subgroup in element order.
std::vector<int> subgroup_generators(const Subgroup& h) {
    std::vector<int> gens;
    Subgroup current = generate_subgroup(h.parent(), {});
    for (int g : h.elements()) {
        if (current.contains(g)) continue;
        gens.push_back(g);
        current = generate_subgroup(h.parent(), gens);
    }
    return gens;
}

int parse_element_at(const GroupPtr& g, std::string_view word, const Line& line) {
    return at_line(line, [&] { return g->parse_element(text::strip(word)); });
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<const Line*> Document::all(std::string_view key) const {
    std::vector<const Line*> out;
    for (const auto& l : lines)
        if (l.key == key) out.push_back(&l);
    return out;
}

const Line* Document::find(std::string_view key) const {
    auto found = all(key);
    if (found.size() > 1) throw ParseError("duplicate '" + std::string(key) + "'", found[1]->number);
    return found.empty() ? nullptr : found[0];
}

const Line& Document::one(std::string_view key) const {
    const Line* l = find(key);
    if (!l) throw ParseError(kind + " document is missing '" + std::string(key) + "'");
    return *l;
}

Document parse_document(std::string_view input) {
    Document doc;
    std::istringstream is{std::string(input)};
    std::string raw;
    int number = 0;
    bool header = false;
    while (std::getline(is, raw)) {
        ++number;
        std::string_view s = text::strip(raw);
        if (s.empty() || s.front() == '#') continue;
        if (!header) {
            if (!text::starts_with(s, kHeader)) throw ParseError("expected header '" + std::string(kHeader) + " <kind>'", number);
            auto kind = text::strip(s.substr(kHeader.size()));
            if (kind.empty() || kind.find(' ') != std::string_view::npos) throw ParseError("bad document kind", number);
            doc.kind = std::string(kind);
            header = true;
            continue;
        }
        auto space = s.find_first_of(" \t");
        Line line;
        line.key = std::string(s.substr(0, space));
        line.value = space == std::string_view::npos ? "" : std::string(text::strip(s.substr(space)));
        line.number = number;
        doc.lines.push_back(std::move(line));
    }
    if (!header) throw ParseError("empty document");
    return doc;
}

std::string print_document(const Document& doc) {
    std::string out = std::string(kHeader) + " " + doc.kind + "\n";
    for (const auto& l : doc.lines) out += l.key + (l.value.empty() ? "" : " " + l.value) + "\n";
    return out;
}

void expect_kind(const Document& doc, std::string_view kind) {
    if (doc.kind != kind) throw ParseError("expected a " + std::string(kind) + " document, got " + doc.kind, 1);
}

// ---------------------------------------------------------------------------
// Groups

std::string print_cycles(const std::vector<int>& perm) {
    std::string out;
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t start = 0; start < perm.size(); ++start) {
        if (seen[start] || perm[start] == static_cast<int>(start)) continue;
        std::vector<std::string> cycle;
        for (std::size_t x = start; !seen[x]; x = perm[x]) {
            seen[x] = true;
            cycle.push_back(std::to_string(x + 1));
        }
        out += "(" + join(cycle, " ") + ")";
    }
    return out.empty() ? "()" : out;
}

Matrix parse_matrix(std::string_view input) {
    std::string_view s = text::strip(input);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw ParseError("matrix must be [[...], ...]");
    std::vector<std::vector<Cyclotomic>> rows;
    for (auto row : text::split_top_level(s.substr(1, s.size() - 2), ',')) {
        if (row.size() < 2 || row.front() != '[' || row.back() != ']') throw ParseError("matrix row must be [...]");
        std::vector<Cyclotomic> values;
        for (auto item : text::split_top_level(row.substr(1, row.size() - 2), ',')) values.push_back(Cyclotomic::parse(item));
        rows.push_back(std::move(values));
    }
    for (const auto& r : rows)
        if (r.size() != rows[0].size()) throw ParseError("ragged matrix");
    return Matrix(std::move(rows));
}

namespace {

void add_group_lines(Document& doc, const GroupPtr& g) {
    if (g->permutation_degree() > 0) {
        doc.add("degree", std::to_string(g->permutation_degree()));
        for (std::size_t i = 0; i < g->generator_permutations().size(); ++i) {
            doc.add("gen", g->generator_names()[i] + " " + print_cycles(g->generator_permutations()[i]));
        }
        return;
    }
    for (const auto& row : g->table()) {
        std::vector<long> r(row.begin(), row.end());
        doc.add("row", print_longs(r));
    }
}

GroupPtr group_from_lines(const Document& doc) {
    auto rows = doc.all("row");
    if (!rows.empty()) {
        if (doc.find("degree") || !doc.all("gen").empty()) throw ParseError("a group is either 'row' lines or 'degree'/'gen' lines", rows[0]->number);
        std::vector<std::vector<int>> table;
        for (const Line* l : rows) {
            auto v = parse_longs(*l);
            table.emplace_back(v.begin(), v.end());
        }
        return at_line(*rows[0], [&] { return FiniteGroup::from_table(table); });
    }
    const Line& deg_line = doc.one("degree");
    long degree = parse_long_at(deg_line.value, deg_line);
    if (degree < 1) throw ParseError("degree must be positive", deg_line.number);
    std::vector<std::string> names;
    std::vector<std::vector<int>> perms;
    for (const Line* l : doc.all("gen")) {
        auto space = l->value.find(' ');
        if (space == std::string::npos) throw ParseError("gen needs a name and cycles", l->number);
        names.push_back(l->value.substr(0, space));
        std::string_view cycles = text::strip(std::string_view(l->value).substr(space));
        if (cycles == "()") {
            std::vector<int> id(degree);
            for (long i = 0; i < degree; ++i) id[i] = static_cast<int>(i);
            perms.push_back(id);
        } else {
            perms.push_back(at_line(*l, [&] { return parse_cycles(cycles, static_cast<int>(degree)); }));
        }
    }
    if (perms.empty()) return FiniteGroup::trivial();
    return at_line(deg_line, [&] { return FiniteGroup::from_permutations(names, perms); });
}

}  // namespace

Document group_document(const GroupPtr& group) {
    Document doc{"group", {}};
    add_group_lines(doc, group);
    return doc;
}

GroupPtr parse_group(const Document& doc) {
    expect_kind(doc, "group");
    return group_from_lines(doc);
}

// ---------------------------------------------------------------------------
// Quotients

namespace {

void add_quotient_lines(Document& doc, const QuotientPtr& q) {
    const auto& g = q->group();
    if (!q->name().empty()) doc.add("name", q->name());
    add_group_lines(doc, g);
    std::vector<std::string> inertia;
    for (int x : subgroup_generators(q->inertia())) inertia.push_back(g->name(x));
    doc.add("inertia", join(inertia, ", "));
    doc.add("phi", g->name(q->phi()));
    doc.add("q", std::to_string(q->q()));
    doc.add("modulus", std::to_string(q->modulus()));
    doc.add("tame", q->tame_check() ? "on" : "off");
    if (!g->is_abelian()) {
        for (const auto& irrep : q->irreps()) {
            std::vector<std::string> parts{irrep.name};
            for (int gen : g->generators()) parts.push_back(irrep.rep(gen).str());
            doc.add("irrep", join(parts, " "));
        }
    }
}

QuotientPtr quotient_from_lines(const Document& doc) {
    GroupPtr g = group_from_lines(doc);
    const Line& inertia_line = doc.one("inertia");
    std::vector<int> inertia;
    if (!inertia_line.value.empty()) {
        for (auto w : text::split_top_level(inertia_line.value, ',')) inertia.push_back(parse_element_at(g, w, inertia_line));
    }
    const Line& phi_line = doc.one("phi");
    int phi = parse_element_at(g, phi_line.value, phi_line);
    const Line& q_line = doc.one("q");
    long q = parse_long_at(q_line.value, q_line);
    LocalGaloisQuotient::Options options;
    if (const Line* l = doc.find("modulus")) options.modulus = parse_long_at(l->value, *l);
    if (const Line* l = doc.find("tame")) {
        if (l->value != "on" && l->value != "off") throw ParseError("tame must be on or off", l->number);
        options.tame_check = l->value == "on";
    }
    if (const Line* l = doc.find("name")) options.name = l->value;
    for (const Line* l : doc.all("irrep")) {
        auto parts = text::tokens(l->value);
        if (parts.size() != g->generators().size() + 1) {
            throw ParseError("irrep needs a name and one matrix per generator", l->number);
        }
        std::vector<Matrix> images;
        for (std::size_t i = 1; i < parts.size(); ++i) images.push_back(at_line(*l, [&] { return parse_matrix(parts[i]); }));
        options.irreps.push_back({parts[0], at_line(*l, [&] { return MatrixRep::from_generators(g, images); })});
    }
    return at_line(phi_line, [&] {
        return LocalGaloisQuotient::make(g, generate_subgroup(g, inertia), phi, q, std::move(options));
    });
}

}  // namespace

Document quotient_document(const QuotientPtr& quotient) {
    Document doc{"quotient", {}};
    add_quotient_lines(doc, quotient);
    return doc;
}

QuotientPtr parse_quotient(const Document& doc) {
    expect_kind(doc, "quotient");
    return quotient_from_lines(doc);
}

FieldDescriptor parse_descriptor(const QuotientPtr& quotient, std::string_view input) {
    std::string_view s = text::strip(input);
    if (s == "base") return FieldDescriptor::base(quotient);
    if (s == "top") return FieldDescriptor::unramified_top(quotient);
    if (!text::starts_with(s, "desc(") || s.back() != ')') throw ParseError("descriptor must be desc(M; (word,m), ...), base or top");
    auto body = s.substr(5, s.size() - 6);
    auto semi = body.find(';');
    long modulus = text::parse_long(body.substr(0, semi));
    std::vector<WeilElement> gens;
    if (semi != std::string_view::npos) {
        auto rest = text::strip(body.substr(semi + 1));
        if (!rest.empty()) {
            for (auto item : text::split_top_level(rest, ',')) {
                if (item.size() < 2 || item.front() != '(' || item.back() != ')') throw ParseError("generator must be (word,m)");
                auto parts = text::split_top_level(item.substr(1, item.size() - 2), ',');
                if (parts.size() != 2) throw ParseError("generator must be (word,m)");
                int g = quotient->group()->parse_element(parts[0]);
                gens.push_back({g, text::parse_long(parts[1])});
            }
        }
    }
    try {
        return FieldDescriptor::generated(quotient, modulus, gens);
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

// ---------------------------------------------------------------------------
// Representations

Document rep_document(const WeilRep& rep, const std::optional<Matrix>& monodromy) {
    Document doc{"rep", {}};
    const auto& q = rep.quotient();
    add_quotient_lines(doc, q);
    const auto& gens = q->group()->generators();
    for (const auto& atom : rep.atoms()) {
        bool plain = false;
        if (!atom.label.empty()) {
            int idx = q->irrep_index(atom.label);
            plain = idx >= 0 && q->irreps()[idx].rep.images() == atom.artin.images();
        }
        std::vector<std::string> parts{atom.label.empty() ? "-" : atom.label, atom.lambda.str()};
        if (!plain) {
            for (int g : gens) parts.push_back(atom.artin(g).str());
        }
        doc.add("atom", join(parts, " "));
    }
    if (monodromy) doc.add("monodromy", monodromy->str());
    return doc;
}

RepFile parse_rep(const Document& doc) {
    expect_kind(doc, "rep");
    QuotientPtr q = quotient_from_lines(doc);
    const auto& gens = q->group()->generators();
    WeilRep rep(q);
    for (const Line* l : doc.all("atom")) {
        auto parts = text::tokens(l->value);
        if (parts.size() < 2) throw ParseError("atom needs a label and a twist", l->number);
        std::string label = parts[0] == "-" ? "" : parts[0];
        Twist lambda = at_line(*l, [&] { return Twist::parse(parts[1]); });
        if (parts.size() == 2) {
            if (label.empty()) throw ParseError("an unlabelled atom needs its generator matrices", l->number);
            at_line(*l, [&] { return &rep.add(label, lambda); });
            continue;
        }
        if (parts.size() != gens.size() + 2) throw ParseError("atom needs one matrix per generator", l->number);
        std::vector<Matrix> images;
        for (std::size_t i = 2; i < parts.size(); ++i) images.push_back(at_line(*l, [&] { return parse_matrix(parts[i]); }));
        at_line(*l, [&] { return &rep.add(MatrixRep::from_generators(q->group(), images), lambda, label); });
    }
    RepFile out{rep, std::nullopt};
    if (const Line* l = doc.find("monodromy")) {
        out.monodromy = at_line(*l, [&] { return parse_matrix(l->value); });
        at_line(*l, [&] {
            validate_wd({out.rep, *out.monodromy});
            return 0;
        });
    }
    return out;
}

// ---------------------------------------------------------------------------
// Oracle tables

namespace {

std::string answer_text(const EulerFactor& answer) {
    std::string out = answer.poly.pretty();
    if (answer.roots) out += " | " + answer.roots->str();
    return out;
}

EulerFactor parse_answer(const std::vector<std::string_view>& parts, std::size_t from, const Line& line) {
    return at_line(line, [&] {
        ExactPolynomial p = ExactPolynomial::parse(parts.at(from));
        if (parts.size() > from + 1) return EulerFactor(p, InverseRootMultiset::parse(parts[from + 1]));
        return EulerFactor(p);
    });
}

}  // namespace

Document table_document(const TableOracle& table) {
    Document doc{"oracle-table", {}};
    add_quotient_lines(doc, table.quotient());
    for (const auto& e : table.entries()) doc.add("entry", e.field.str() + " | " + answer_text(e.answer));
    return doc;
}

TableOracle parse_table(const Document& doc) {
    expect_kind(doc, "oracle-table");
    QuotientPtr q = quotient_from_lines(doc);
    std::vector<TableEntry> entries;
    for (const Line* l : doc.all("entry")) {
        auto parts = text::split_top_level(l->value, '|');
        if (parts.size() < 2 || parts.size() > 3) throw ParseError("entry must be <descriptor> | <polynomial> [| <roots>]", l->number);
        FieldDescriptor field = at_line(*l, [&] { return parse_descriptor(q, parts[0]); });
        entries.push_back({field, parse_answer(parts, 1, *l)});
    }
    return TableOracle(q, std::move(entries));
}

Document query_log_document(const std::vector<QueryRecord>& log) {
    Document doc{"query-log", {}};
    for (const auto& r : log) doc.add("query", r.field.str() + " | " + answer_text(r.answer));
    return doc;
}

// ---------------------------------------------------------------------------
// Curves

Document curve_document(const CurveSpec& spec) {
    Document doc{"curve", {}};
    using M = CurveSpec::Model;
    doc.add("model", spec.model == M::elliptic ? "elliptic" : spec.model == M::hyperelliptic ? "hyperelliptic" : "node-fiber");
    doc.add("field", std::to_string(spec.p) + " " + std::to_string(spec.k));
    switch (spec.model) {
        case M::elliptic: {
            const auto& e = spec.elliptic;
            doc.add("a", print_longs({e.a1, e.a2, e.a3, e.a4, e.a6}));
            break;
        }
        case M::hyperelliptic:
            doc.add("f", print_longs(spec.hyperelliptic.f));
            if (!spec.hyperelliptic.h.empty()) doc.add("h", print_longs(spec.hyperelliptic.h));
            break;
        case M::node_fiber:
            doc.add("nodes", std::to_string(spec.nodes));
            break;
    }
    return doc;
}

CurveSpec parse_curve(const Document& doc) {
    expect_kind(doc, "curve");
    CurveSpec spec;
    const Line& model = doc.one("model");
    const Line& field = doc.one("field");
    auto pk = parse_longs(field);
    if (pk.size() != 2 || pk[1] < 1) throw ParseError("field must be '<p> <k>'", field.number);
    spec.p = pk[0];
    spec.k = static_cast<int>(pk[1]);
    if (model.value == "elliptic") {
        spec.model = CurveSpec::Model::elliptic;
        const Line& a = doc.one("a");
        auto v = parse_longs(a);
        if (v.size() != 5) throw ParseError("a needs five coefficients a1 a2 a3 a4 a6", a.number);
        spec.elliptic = {v[0], v[1], v[2], v[3], v[4]};
    } else if (model.value == "hyperelliptic") {
        spec.model = CurveSpec::Model::hyperelliptic;
        spec.hyperelliptic.f = parse_longs(doc.one("f"));
        if (const Line* h = doc.find("h")) spec.hyperelliptic.h = parse_longs(*h);
    } else if (model.value == "node-fiber") {
        spec.model = CurveSpec::Model::node_fiber;
        const Line& n = doc.one("nodes");
        spec.nodes = static_cast<int>(parse_long_at(n.value, n));
    } else {
        throw ParseError("model must be elliptic, hyperelliptic or node-fiber", model.number);
    }
    return spec;
}

// ---------------------------------------------------------------------------
// Root-number data

Document root_data_document(const TwistData& data) {
    Document doc{"root-data", {}};
    doc.add("dimension", std::to_string(data.dimension));
    doc.add("additive", data.additive_place);
    for (const auto* c : {&data.first, &data.second}) {
        doc.add("component", value_str(c->w_V) + " " + value_str(c->w_V_over_F) + " " + std::to_string(c->g));
    }
    for (const auto& pv : data.semistable) doc.add("semistable", pv.place + " " + value_str(pv.value));
    return doc;
}

TwistData parse_root_data(const Document& doc) {
    expect_kind(doc, "root-data");
    TwistData data;
    data.semistable.clear();
    if (const Line* l = doc.find("dimension")) data.dimension = static_cast<int>(parse_long_at(l->value, *l));
    data.additive_place = doc.one("additive").value;
    auto comps = doc.all("component");
    if (comps.size() != 2) throw ParseError("root data needs exactly two component lines");
    LocalRootDatum* targets[2] = {&data.first, &data.second};
    for (int i = 0; i < 2; ++i) {
        auto parts = text::tokens(comps[i]->value);
        if (parts.size() != 3) throw ParseError("component must be '<w(V)> <w(V/F)> <g>'", comps[i]->number);
        *targets[i] = at_line(*comps[i], [&] {
            return LocalRootDatum{Cyclotomic::parse(parts[0]), Cyclotomic::parse(parts[1]),
                                  static_cast<int>(text::parse_long(parts[2]))};
        });
    }
    for (const Line* l : doc.all("semistable")) {
        auto parts = text::tokens(l->value);
        if (parts.size() != 2) throw ParseError("semistable must be '<place> <value>'", l->number);
        data.semistable.push_back({parts[0], at_line(*l, [&] { return Cyclotomic::parse(parts[1]); })});
    }
    return data;
}

// ---------------------------------------------------------------------------

std::string reprint(std::string_view input) {
    Document doc = parse_document(input);
    if (doc.kind == "group") return print_document(group_document(parse_group(doc)));
    if (doc.kind == "quotient") return print_document(quotient_document(parse_quotient(doc)));
    if (doc.kind == "rep") {
        RepFile r = parse_rep(doc);
        return print_document(rep_document(r.rep, r.monodromy));
    }
    if (doc.kind == "oracle-table") return print_document(table_document(parse_table(doc)));
    if (doc.kind == "curve") return print_document(curve_document(parse_curve(doc)));
    if (doc.kind == "root-data") return print_document(root_data_document(parse_root_data(doc)));
    throw ParseError("unknown document kind '" + doc.kind + "'", 1);
}

// ---------------------------------------------------------------------------
// Curve documents

namespace {

long power(long p, int k) {
    long q = 1;
    for (int i = 0; i < k; ++i) q *= p;
    return q;
}

}  // namespace

std::vector<PointCount> curve_counts(const CurveSpec& spec, int degree, CountMode mode) {
    if (degree < 1) throw DomainError("degree must be positive");
    std::vector<PointCount> out;
    for (int i = 1; i <= degree; ++i) {
        if (spec.model == CurveSpec::Model::node_fiber) {
            long q = power(spec.p, spec.k * i);
            out.push_back({q, split_node_fiber_count(q, spec.nodes)});
            continue;
        }
        FqField field = fq_build(spec.p, spec.k * i);
        long n = spec.model == CurveSpec::Model::elliptic ? count_points_elliptic(spec.elliptic, field)
                                                          : count_points_hyperelliptic(spec.hyperelliptic, field, mode);
        out.push_back({field.q(), n});
    }
    return out;
}

EulerFactor curve_zeta(const CurveSpec& spec) {
    switch (spec.model) {
        case CurveSpec::Model::elliptic:
            return euler_factor_good(spec.elliptic, fq_build(spec.p, spec.k));
        case CurveSpec::Model::hyperelliptic: {
            auto c = curve_counts(spec, 2);
            return genus2_lpoly_from_counts({c[0].q, c[0].count, c[1].count});
        }
        case CurveSpec::Model::node_fiber: {
            std::vector<long> counts;
            for (const auto& c : curve_counts(spec, spec.nodes)) counts.push_back(c.count);
            ExactPolynomial p = lpoly_from_counts(power(spec.p, spec.k), counts, spec.nodes);
            return EulerFactor(p, InverseRootMultiset(std::vector<Cyclotomic>(spec.nodes, Cyclotomic(1))));
        }
    }
    throw DomainError("unknown curve model");
}

}  // namespace weilrep::io
