#include <doctest.h>

#include "oracles.hpp"
#include "polycyclic/corpus.hpp"
#include "polycyclic/error.hpp"

using namespace polycyclic;

namespace {

Corpus table(const std::string& name) { return load_corpus(std::string(CORPUS_DIR) + "/" + name + ".json"); }

CorpusRecord find(const std::string& name, const std::string& id) {
    for (const auto& r : table(name).records)
        if (r.id == id) return r;
    throw std::runtime_error("missing record " + id);
}

Errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::Overflow;
}

const char* kRecord =
    R"({"id":"x","q":5,"l":2,"n":4,"a":[[1],[1]],"g":[[1,1],[4,1,4,1]],"M":[[2,2],[1,4]],)"
    R"("expect":{"params":[8,4,4],"flags":["lcd","amds"]}})";

}  // namespace

TEST_CASE("record round trip") {
    CorpusRecord r = parse_record(kRecord);
    CHECK(r.q == 5);
    CHECK(r.p == 5);
    CHECK(r.m == 1);
    CHECK(r.expect.flags == std::vector<std::string>{"lcd", "amds"});
    CHECK(parse_record(record_to_json(r)) == r);
    for (const char* name : {"table1", "table2", "table3", "table4"}) {
        Corpus c = table(name);
        CHECK_FALSE(c.records.empty());
        Corpus back = parse_corpus(corpus_to_json(c));
        CHECK(back.name == c.name);
        CHECK(back.records == c.records);
    }
    CHECK(parse_corpus(std::string("[") + kRecord + "]").records.size() == 1);
    CHECK(parse_corpus(kRecord).records.size() == 1);
}

TEST_CASE("schema errors") {
    CHECK(code_of([] { parse_record("{\"q\":2"); }) == Errc::ParseError);
    CHECK(code_of([] { parse_record("[]"); }) == Errc::SchemaError);
    CHECK(code_of([] { parse_record(R"({"q":2,"l":1,"n":1,"a":[[1]],"g":[[1]],"expect":{"params":[1,1,1]}})"); }) ==
          Errc::SchemaError);
    CHECK(code_of([] {
              parse_record(
                  R"({"id":"y","q":2,"l":1,"n":1,"a":[[1]],"g":[[1]],"expect":{"params":[1,1,1],"flags":["optimal"]}})");
          }) == Errc::SchemaError);
    CHECK(code_of([] { parse_record(R"({"id":"y","q":"two","l":1,"n":1,"a":[[1]],"g":[[1]],"expect":{"params":[1,1,1]}})"); }) ==
          Errc::SchemaError);
    CHECK(code_of([] { load_corpus("/nonexistent/corpus.json"); }) == Errc::ParseError);

    CorpusRecord r = parse_record(kRecord);
    r.q = 6;
    r.p = 6;
    CHECK_THROWS_AS(instantiate(r), Error);
    r = parse_record(kRecord);
    r.g[0] = {2, 0, 1};
    CHECK(code_of([&] { instantiate(r); }) == Errc::NotADivisor);
    r = parse_record(kRecord);
    r.g[1] = {9, 1};
    CHECK(code_of([&] { instantiate(r); }) == Errc::SchemaError);
    r = parse_record(kRecord);
    r.M = {{1, 1}, {1, 1}};
    CHECK(code_of([&] { instantiate(r); }) == Errc::SingularMatrix);
    r = parse_record(kRecord);
    r.a.pop_back();
    CHECK(code_of([&] { instantiate(r); }) == Errc::SchemaError);
}

TEST_CASE("tables verify") {
    for (const char* name : {"table1", "table2", "table3", "table4"}) {
        for (const auto& r : table(name).records) {
            RecordReport rep = verify_record(r);
            CAPTURE(r.id);
            CHECK(rep.pass);
            CHECK(rep.mismatches.empty());
            CHECK(rep.d_exact);
            CHECK(rep.params == r.expect.params);
        }
    }
}

TEST_CASE("negative controls") {
    CorpusRecord r = find("table1", "t1-r24");
    CHECK(verify_record(r).pass);
    r.expect.params[2] += 1;
    RecordReport off = verify_record(r);
    CHECK_FALSE(off.pass);
    REQUIRE(off.mismatches.size() == 1);
    CHECK(off.mismatches[0].find("params [8,4,4]") == 0);

    r = find("table1", "t1-r24");
    r.expect.flags.push_back("mds");
    off = verify_record(r);
    CHECK_FALSE(off.pass);
    CHECK(off.mismatches[0] == "flag mds expected but does not hold");

    // A distance that cannot be certified in budget is reported, not trusted.
    r = find("table1", "t1-r24");
    off = verify_record(r, 0);
    CHECK_FALSE(off.d_exact);
    CHECK_FALSE(off.pass);

    r = find("table4", "t4-r3");
    (*r.expect.quantum)[1] += 2;
    CHECK_FALSE(verify_record(r).pass);
}

TEST_CASE("computed flags") {
    CorpusRecord r = find("table1", "t1-r24");
    Instance inst = instantiate(r);
    LinearCode img = gray_image(inst.code, inst.gray);
    auto flags = compute_flags(inst, img, lc_min_distance(img));
    CHECK(flags.at("lcd"));
    CHECK(flags.at("amds"));
    CHECK_FALSE(flags.at("mds"));
    CHECK(flags.at("quasicyclic"));
    auto partial = compute_flags(inst, img, Distance{1, false});
    CHECK(partial.count("mds") == 0);
    CHECK(partial.count("amds") == 0);
}

TEST_CASE("LCD over F_4 depends on the inner product") {
    // The [9,6,3]_4 image is LCD for the Hermitian product (conjugation
    // x -> x^2) while its Euclidean hull has dimension 2.
    Instance inst = instantiate(find("table2", "t2-r8"));
    LinearCode img = gray_image(inst.code, inst.gray);
    const Field& f = inst.field;
    CHECK(img.n() == 9);
    CHECK(img.k() == 6);
    CHECK_FALSE(lc_is_lcd(img));
    CHECK(lc_hull_dimension(img) == 2);
    Matrix conj = img.gen();
    for (std::size_t r = 0; r < conj.rows(); ++r)
        for (std::size_t c = 0; c < conj.cols(); ++c) conj(r, c) = f.pow(conj(r, c), 2);
    CHECK(determinant(img.gen() * conj.transpose()) != 0);
}
