#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "homhopf/catalog.hpp"
#include "homhopf/constructions.hpp"
#include "homhopf/format.hpp"

using namespace homhopf;

namespace {

const char* kSmall = R"(homhopf 1
# the classical group algebra of Z/2
name z2
field_char 0
dim 2
basis 1 g
mul
0 0 0 1
0 1 1 1
1 0 1 1
1 1 0 1
end
unit
0 1
end
alpha
0 0 1
1 1 1
end
)";

std::string replace(std::string s, const std::string& from, const std::string& to) {
    const auto p = s.find(from);
    REQUIRE(p != std::string::npos);
    return s.replace(p, from.size(), to);
}

void round_trip(const AlgebraFile& f) {
    const std::string text = serialize_algebra_file(f);
    const AlgebraFile back = parse_algebra_file(text);
    CHECK(back == f);
    CHECK(serialize_algebra_file(back) == text);
}

}  // namespace

TEST_CASE("parsing a small document") {
    const AlgebraFile f = parse_algebra_file(kSmall);
    CHECK(f.name == "z2");
    CHECK(f.dim() == 2);
    CHECK(f.basis == std::vector<std::string>{"1", "g"});
    CHECK_FALSE(f.has_coalgebra());
    CHECK(check_hom_algebra(f.algebra()).passed());
    CHECK_THROWS_AS(f.bialgebra(), InvalidParameter);
    round_trip(f);
}

TEST_CASE("catalog entries round-trip") {
    for (const auto& name : {"ax1", "sweedler_hom", "cyclic:2", "cyclic:3", "cyclic:4", "cyclic:5", "cyclic:6",
                             "classical_cyclic:2", "classical_cyclic:3", "s3", "onedim"}) {
        CAPTURE(name);
        const CatalogEntry e = catalog_lookup(name);
        const AlgebraFile f = file_from_entry(e);
        round_trip(f);
        const CatalogEntry back = entry_from_file(parse_algebra_file(serialize_algebra_file(f)));
        CHECK(back.hopf.mul() == e.hopf.mul());
        CHECK(back.hopf.antipode() == e.hopf.antipode());
        CHECK(bool(back.rmatrix) == bool(e.rmatrix));
        CHECK(bool(back.action) == bool(e.action));
    }
}

TEST_CASE("construction outputs round-trip") {
    const auto ax1 = catalog_ax1();
    const auto sw = catalog_sweedler_hom().hopf;
    const auto c3 = catalog_cyclic(3).hopf;
    round_trip(file_from_hopf("dual", dual(sw)));
    round_trip(file_from_hopf("op", opposite(sw)));
    AlgebraFile d = file_from_hopf("double", drinfeld_double(c3));
    d.rmatrix = canonical_r_matrix(c3).entries;
    round_trip(d);
    round_trip(file_from_bialgebra("tilde", drinfeld_double_tilde(sw)));
    round_trip(file_from_algebra("heisenberg", heisenberg_double(sw)));
    round_trip(file_from_hopf("bicross", bicrossproduct(ax1.hopf, *ax1.partner, *ax1.action, *ax1.coaction)));
    round_trip(file_from_hopf("self", self_bicross(sw).hopf));
    round_trip(file_from_hopf("pair", dual_pair_double(evaluation_pairing(c3)).hopf));
    const CanonicalCocycles cc = canonical_cocycles(ax1.hopf);
    AlgebraFile s = file_from_bialgebra("sigma", cc.sigma.algebra);
    s.cocycle = cc.sigma.gram;
    s.cocycle_side = Side::left;
    round_trip(s);
    AlgebraFile t = file_from_bialgebra("eta", cc.eta.algebra);
    t.cocycle = cc.eta.gram;
    t.cocycle_side = Side::right;
    round_trip(t);
    round_trip(file_from_algebra("twist", cocycle_twist(cc.sigma.algebra, cc.sigma)));

    const PairingForm P = evaluation_pairing(c3);
    AlgebraFile p = file_from_hopf("paired", P.left);
    p.partner = std::make_shared<AlgebraFile>(file_from_hopf("partner", P.right));
    p.pairing = P.gram;
    round_trip(p);
}

TEST_CASE("canonical output") {
    AlgebraFile f = parse_algebra_file(replace(replace(kSmall, "0 1 1 1\n", "0 1 1 2/2\n"), "1 1 0 1\n", ""));
    const std::string out = serialize_algebra_file(f);
    // sorted entries, reduced fractions, zeros omitted
    CHECK(out.find("0 1 1 1\n") != std::string::npos);
    CHECK(out.find("2/2") == std::string::npos);
    CHECK(out.find("1 1 0") == std::string::npos);
    AlgebraFile g = parse_algebra_file(replace(kSmall, "0 0 0 1\n0 1 1 1\n", "0 1 1 1\n0 0 0 1\n"));
    CHECK(serialize_algebra_file(g) == serialize_algebra_file(parse_algebra_file(kSmall)));
    CHECK(sha256_hex(serialize_algebra_file(g)) == sha256_hex(serialize_algebra_file(parse_algebra_file(kSmall))));
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("index out of range") {
    try {
        parse_algebra_file(replace(kSmall, "1 1 0 1\n", "1 1 5 1\n"));
        FAIL("expected RangeError");
    } catch (const RangeError& e) {
        CHECK(e.line == 11);
        CHECK(e.column == 5);
    }
}

TEST_CASE("zero denominators and malformed scalars") {
    try {
        parse_algebra_file(replace(kSmall, "1 1 0 1\n", "1 1 0 1/0\n"));
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 11);
        CHECK(e.column == 7);
    }
    CHECK_THROWS_AS(parse_algebra_file(replace(kSmall, "1 1 0 1\n", "1 1 0 x\n")), ParseError);
    CHECK_THROWS_AS(parse_algebra_file(replace(kSmall, "1 1 0 1\n", "1 1 1\n")), ParseError);
    CHECK_THROWS_AS(parse_algebra_file(replace(kSmall, "1 1 0 1\n", "1 -1 0 1\n")), ParseError);
}

TEST_CASE("duplicate entries are rejected") {
    try {
        parse_algebra_file(replace(kSmall, "1 1 0 1\n", "1 1 0 1\n1 1 0 2\n"));
        FAIL("expected DuplicateEntry");
    } catch (const DuplicateEntry& e) {
        CHECK(e.line == 12);
    }
    CHECK_THROWS_AS(parse_algebra_file(replace(kSmall, "unit\n0 1\nend\n", "unit\n0 1\nend\nunit\n0 1\nend\n")),
                    DuplicateEntry);
}

TEST_CASE("structural errors") {
    CHECK_THROWS_AS(parse_algebra_file(replace(kSmall, "homhopf 1", "homhopf 2")), ParseError);
    CHECK_THROWS_AS(parse_algebra_file(replace(kSmall, "alpha\n0 0 1\n1 1 1\nend\n", "")), ParseError);
    CHECK_THROWS_AS(parse_algebra_file(replace(kSmall, "dim 2", "dim 3")), ParseError);
    CHECK_THROWS_AS(parse_algebra_file(replace(kSmall, "field_char 0", "field_char 2")), ParseError);
    CHECK_THROWS_AS(parse_algebra_file(replace(kSmall, "end\nunit", "unit")), ParseError);
    CHECK_THROWS_AS(parse_algebra_file(replace(kSmall, "mul\n", "frobnicate\n")), ParseError);
    CHECK_THROWS_AS(parse_algebra_file(""), ParseError);
    // a singular structure map is rejected
    CHECK_THROWS_AS(parse_algebra_file(replace(kSmall, "1 1 1\nend", "end")).algebra(), Singular);
}

TEST_CASE("loading by path or catalog name") {
    CHECK(load_algebra("cyclic:4").dim() == 4);
    CHECK(load_algebra("sweedler_hom").rmatrix.has_value());
    CHECK_THROWS_AS(load_algebra("/nonexistent/file.alg"), IoError);
    const std::string path = "format_test_tmp.alg";
    write_text_file(path, kSmall);
    CHECK(load_algebra(path).name == "z2");
    std::remove(path.c_str());
}
