#include <gtest/gtest.h>

#include "weilrep/errors.hpp"
#include "weilrep/fixtures.hpp"
#include "weilrep/io.hpp"

using namespace weilrep;

namespace {

std::string rep_text(const WeilRep& rep) { return io::print_document(io::rep_document(rep)); }

// Parsing builds a fresh quotient, so compare canonical forms by their text.
bool same_rep(const WeilRep& a, const WeilRep& b) {
    return rep_text(canonical_decomposition(a)) == rep_text(canonical_decomposition(b));
}

void expect_stable(const std::string& text) {
    EXPECT_EQ(io::reprint(text), text);
}

}  // namespace

TEST(TextFormat, DocumentSyntax) {
    auto doc = io::parse_document("# comment\n\nweilrep v1 curve\nmodel   elliptic\n  field 13 1\n\na 0 0 0 -1 0\n");
    EXPECT_EQ(doc.kind, "curve");
    ASSERT_EQ(doc.lines.size(), 3u);
    EXPECT_EQ(doc.lines[0].value, "elliptic");
    EXPECT_EQ(doc.lines[1].number, 5);
    EXPECT_EQ(io::print_document(doc), "weilrep v1 curve\nmodel elliptic\nfield 13 1\na 0 0 0 -1 0\n");
    EXPECT_THROW(io::parse_document("weilrep v2 curve\n"), ParseError);
    EXPECT_THROW(io::parse_document(""), ParseError);
}

TEST(TextFormat, GroupsAndQuotients) {
    for (const auto& q : fixtures::corpus_quotients()) {
        std::string g = io::print_document(io::group_document(q->group()));
        expect_stable(g);
        std::string text = io::print_document(io::quotient_document(q));
        expect_stable(text);
        auto back = io::parse_quotient(io::parse_document(text));
        EXPECT_EQ(back->group()->order(), q->group()->order());
        EXPECT_EQ(back->e(), q->e());
        EXPECT_EQ(back->q(), q->q());
        EXPECT_EQ(back->irreps().size(), q->irreps().size());
    }
    expect_stable(io::print_document(io::quotient_document(fixtures::trivial_2633())));
    EXPECT_EQ(io::print_cycles({1, 0, 3, 2}), "(1 2)(3 4)");
    EXPECT_EQ(io::print_cycles({0, 1}), "()");
}

TEST(TextFormat, FixtureRepsRoundTrip) {
    for (const auto& named : fixtures::registry()) {
        std::string text;
        if (named.rep) {
            WeilRep rep = named.rep();
            text = rep_text(rep);
            auto back = io::parse_rep(io::parse_document(text));
            EXPECT_TRUE(same_rep(back.rep, rep)) << named.name;
            EXPECT_FALSE(back.monodromy.has_value());
        } else {
            WeilDeligneRep wd = named.wd();
            text = io::print_document(io::rep_document(wd.rho, wd.N));
            auto back = io::parse_rep(io::parse_document(text));
            ASSERT_TRUE(back.monodromy.has_value()) << named.name;
            EXPECT_EQ(*back.monodromy, wd.N);
        }
        expect_stable(text);
    }
}

TEST(TextFormat, CorpusRepsRoundTrip) {
    for (const auto& rep : generate_corpus(3, 40)) {
        std::string text = rep_text(rep);
        expect_stable(text);
        EXPECT_TRUE(same_rep(io::parse_rep(io::parse_document(text)).rep, rep));
    }
}

TEST(TextFormat, OracleTables) {
    for (const TableOracle& table : {fixtures::example_3_1_table(), fixtures::example_3_2_table(),
                                     tabulate(fixtures::example_3_1(), all_descriptors(fixtures::zhat_c4()))}) {
        std::string text = io::print_document(io::table_document(table));
        expect_stable(text);
        auto back = io::parse_table(io::parse_document(text));
        ASSERT_EQ(back.entries().size(), table.entries().size());
        for (std::size_t i = 0; i < back.entries().size(); ++i) {
            EXPECT_EQ(back.entries()[i].field.str(), table.entries()[i].field.str());
            EXPECT_EQ(back.entries()[i].answer.poly, table.entries()[i].answer.poly);
            EXPECT_EQ(back.entries()[i].answer.roots, table.entries()[i].answer.roots);
        }
    }
}

TEST(TextFormat, HandWrittenTable) {
    const std::string text =
        "weilrep v1 oracle-table\n"
        "degree 4\n"
        "gen g (1 2 3 4)\n"
        "inertia g\n"
        "phi e\n"
        "q 13\n"
        "entry base | 1\n"
        "entry top | 1 + 4T + 13T^2\n"
        "entry desc(4; (g,1)) | 1 - 6T + 13T^2\n";
    auto table = io::parse_table(io::parse_document(text));
    EXPECT_EQ(table.entries()[1].field.str(), fixtures::example_3_1_L().str());
    EXPECT_EQ(table.entries()[2].field.str(), fixtures::example_3_1_L_prime().str());
    auto result = reconstruct(table, table.quotient());
    auto atoms = [](const std::string& t) { return t.substr(t.find("\natom")); };
    EXPECT_EQ(atoms(rep_text(canonical_decomposition(result.rep))),
              atoms(rep_text(canonical_decomposition(fixtures::example_3_1()))));
}

TEST(TextFormat, ErrorsCarryLineNumbers) {
    const std::string bad =
        "weilrep v1 oracle-table\n"
        "degree 4\n"
        "gen g (1 2 3 4)\n"
        "inertia g\n"
        "phi e\n"
        "q 13\n"
        "entry desc(4; (h,1)) | 1\n";
    try {
        io::parse_table(io::parse_document(bad));
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 7);
    }
    try {
        io::parse_curve(io::parse_document("weilrep v1 curve\nmodel elliptic\nfield 13 1\na 0 0 x 1 0\n"));
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 4);
    }
    EXPECT_THROW(io::parse_rep(io::parse_document("weilrep v1 curve\nmodel elliptic\n")), ParseError);
}

TEST(TextFormat, Descriptors) {
    auto q = fixtures::sd16();
    for (const auto& d : all_descriptors(q, 4)) {
        EXPECT_TRUE(io::parse_descriptor(q, d.str()).same_field(d)) << d.str();
    }
    EXPECT_THROW(io::parse_descriptor(q, "desc(4; (x,1))"), ParseError);
    EXPECT_THROW(io::parse_descriptor(q, "nonsense"), ParseError);
}

TEST(TextFormat, CurvesAndRootData) {
    io::CurveSpec e;
    e.p = 13;
    e.elliptic = fixtures::fiber_13().e1;
    io::CurveSpec h;
    h.model = io::CurveSpec::Model::hyperelliptic;
    h.hyperelliptic = fixtures::genus2_curve();
    io::CurveSpec n;
    n.model = io::CurveSpec::Model::node_fiber;
    n.p = 2633;
    n.nodes = 2;
    for (const auto& spec : {e, h, n}) expect_stable(io::print_document(io::curve_document(spec)));
    auto back = io::parse_curve(io::parse_document(io::print_document(io::curve_document(h))));
    EXPECT_EQ(back.hyperelliptic.f, fixtures::genus2_curve().f);
    EXPECT_EQ(back.hyperelliptic.h, fixtures::genus2_curve().h);

    std::string root = io::print_document(io::root_data_document(genus2_twist_data()));
    EXPECT_EQ(root, "weilrep v1 root-data\ndimension 2\nadditive 13\ncomponent 1 1 1\ncomponent -1 1 1\nsemistable 2633 1\n");
    expect_stable(root);
}
