#include "augalg/cache.hpp"
#include "augalg/checks.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

using namespace augalg;
namespace fs = std::filesystem;

namespace {
RationalField Q;
PrimeField F3(3);

fs::path scratch(const std::string& name) {
    auto p = fs::temp_directory_path() / ("hhprod-test-" + name + "-" + std::to_string(::getpid()));
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

int run_cli(const std::string& args, const fs::path& cache) {
    const std::string cmd = "HHPROD_CACHE_DIR=" + cache.string() + " " + HHPROD_BIN + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}
}  // namespace

TEST(JsonIo, AlgebraRoundTripIsExact) {
    for (const auto& name : registry_names()) {
        auto a = registry_algebra(Q, name);
        const Json j = algebra_json(a);
        auto b = algebra_from_json(Q, j);
        EXPECT_EQ(algebra_json(b).dump(), j.dump()) << name;
    }
    auto g = registry_algebra(F3, "gf3-triple");
    EXPECT_EQ(algebra_json(algebra_from_json(F3, algebra_json(g))).dump(), algebra_json(g).dump());
}

TEST(JsonIo, RationalsAsLowestTermStrings) {
    EXPECT_EQ(scalar_json(Q, mpq_class(6, 4)), "3/2");
    EXPECT_EQ(scalar_json(Q, mpq_class(-2)), "-2");
    EXPECT_EQ(scalar_json(F3, F3.from_int(-1)), 2);
    EXPECT_EQ(scalar_from_json(Q, Json("4/6")), mpq_class(2, 3));
}

TEST(JsonIo, MalformedDocumentsAreRejected) {
    EXPECT_THROW(algebra_from_json(Q, Json::parse(R"({"basis": ["1"], "unit": ["1"], "aug": ["1"]})")), MalformedInput);
    EXPECT_THROW(algebra_from_json(Q, Json::parse(R"({"basis": ["1"], "unit": ["1"], "aug": ["1"], "mul": [[0, 0, 5, "1"]]})")),
                 MalformedInput);
    EXPECT_THROW(algebra_from_json(Q, Json::parse(R"({"field": {"char": 3}, "basis": ["1"], "unit": ["1"], "aug": ["1"], "mul": []})")),
                 MalformedInput);
    EXPECT_THROW(scalar_from_json(Q, Json("1/0")), MalformedInput);
}

TEST(JsonIo, PresentationRoundTrip) {
    Presentation<RationalField> p;
    p.field = Q;
    p.generators = {{"x", 1}, {"y", 1}};
    p.relations = {{{mpq_class(1), {0, 0}}}, {{mpq_class(1), {1, 1}}}};
    p.cutoff = 4;
    const Json j = presentation_json(p);
    EXPECT_EQ(presentation_json(presentation_from_json(Q, j)).dump(), j.dump());
}

TEST(JsonIo, ResolutionBundleReproducesMatrices) {
    auto res = minimal_bimodule_resolution(truncated_polynomial(Q, 3), 3);
    build_homotopy(res);
    const Json j = resolution_json(res);
    auto back = resolution_from_json(Q, j);
    EXPECT_EQ(resolution_json(back).dump(), j.dump());
    for (std::size_t n = 1; n <= res.length(); ++n) EXPECT_TRUE(back.diff[n] == res.diff[n]);
    EXPECT_TRUE(verify_exact(back).exact());
}

TEST(JsonIo, RingTableRoundTrip) {
    auto hh = hh_ring(truncated_polynomial(Q, 2), 3);
    const Json j = table_json(hh.table);
    EXPECT_EQ(table_json(table_from_json(Q, j)).dump(), j.dump());
}

TEST(Registry, EveryEntryPassesAxioms) {
    for (const auto& name : registry_names()) {
        EXPECT_TRUE(check_axioms(registry_algebra(Q, name)).pass) << name;
        EXPECT_TRUE(check_axioms(registry_algebra(F3, name)).pass) << name;
    }
}

TEST(Registry, DimensionsOfNamedExamples) {
    EXPECT_EQ(registry_algebra(Q, "gf3-triple").dim(), 5u);
    EXPECT_EQ(registry_algebra(Q, "product(trunc-poly:3, trunc-poly:2)").dim(), 4u);
    EXPECT_EQ(registry_algebra(Q, "coproduct(trunc-poly:2,trunc-poly:2,3)").dim(), 7u);
    EXPECT_EQ(registry_algebra(Q, "k").dim(), 1u);
    const auto p = registry_algebra(Q, "product(trunc-poly:2,trunc-poly:2)");
    EXPECT_EQ(p.labels(), (std::vector<std::string>{"1", "x", "y"}));
}

TEST(Registry, DeterministicAndStrict) {
    EXPECT_EQ(algebra_json(registry_algebra(Q, "gf3-triple")).dump(), algebra_json(registry_algebra(Q, "gf3-triple")).dump());
    EXPECT_THROW(registry_algebra(Q, "trunc-poly"), MalformedInput);
    EXPECT_THROW(registry_algebra(Q, "trunc-poly:0"), MalformedInput);
    EXPECT_THROW(registry_algebra(Q, "product(k,k"), MalformedInput);
    EXPECT_THROW(registry_algebra(Q, "polynomial:2"), MalformedInput);
}

TEST(Cache, SecondLookupHitsWithIdenticalValue) {
    auto dir = scratch("cache");
    Cache cache(dir);
    int calls = 0;
    CacheKey key{algebra_json(truncated_polynomial(Q, 3)), "ext", {{"nmax", 4}}};
    auto producer = [&] {
        ++calls;
        return Json{{"dims", ext_ring(truncated_polynomial(Q, 3), 4).table.dims}};
    };
    auto first = cache.get_or_compute(key, producer);
    auto second = cache.get_or_compute(key, producer);
    EXPECT_FALSE(first.hit);
    EXPECT_TRUE(second.hit);
    EXPECT_EQ(calls, 1);
    EXPECT_EQ(first.value.dump(), second.value.dump());
    fs::remove_all(dir);
}

TEST(Cache, KeyDependsOnParameters) {
    CacheKey a{Json::object(), "ext", {{"nmax", 4}}}, b{Json::object(), "ext", {{"nmax", 5}}};
    EXPECT_NE(a.digest(), b.digest());
    EXPECT_EQ(a.digest(), CacheKey(a).digest());
    EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Cache, CorruptEntryIsRecomputed) {
    auto dir = scratch("corrupt");
    Cache cache(dir);
    CacheKey key{Json::object(), "op", Json::object()};
    cache.get_or_compute(key, [] { return Json(1); });
    std::ofstream(cache.path_of(key.digest())) << "{not json";
    auto again = cache.get_or_compute(key, [] { return Json(1); });
    EXPECT_FALSE(again.hit);
    EXPECT_EQ(again.value, Json(1));
    EXPECT_TRUE(cache.get_or_compute(key, [] { return Json(2); }).hit);
    fs::remove_all(dir);
}

TEST(Checks, EveryNameDispatches) {
    EXPECT_THROW(run_check(0u, make_request("no-such-check")), UnknownCheck);
    for (const auto& name : check_names()) {
        auto req = make_request(name, name == "chinese-remainder" ? "rad-square-zero:2" : "trunc-poly:2");
        req.nmax = 2;
        if (name == "hoch-coprod-heuristic") req.cutoff = 5;
        auto r = run_check(0u, req);
        EXPECT_TRUE(r.pass) << name << ": " << r.to_json().dump();
        EXPECT_EQ(r.params["request"]["name"], name);
    }
}

TEST(Checks, CharacteristicTwoRefused) {
    auto req = make_request("gr-centre");
    EXPECT_THROW(run_check(2u, req), PreconditionError);
}

TEST(Cli, ExitCodes) {
    auto cache = scratch("cli");
    EXPECT_EQ(run_cli("check main-theo --left trunc-poly:2 --right trunc-poly:2 --nmax 4", cache), 0);
    EXPECT_EQ(run_cli("ext --algebra trunc-poly:3 --nmax 4", cache), 0);
    EXPECT_EQ(run_cli("check no-such-check", cache), 2);
    EXPECT_EQ(run_cli("frobnicate", cache), 2);
    EXPECT_EQ(run_cli("ext --algebra 'product(k'", cache), 3);
    EXPECT_EQ(run_cli("check gr-centre --cutoff 0", cache), 4);
    const auto bad = cache / "bad.json";
    std::ofstream(bad) << R"({"field":{"char":0},"basis":["1","x"],"unit":["1","0"],)"
                       << R"("mul":[[0,0,0,"1"],[0,1,1,"1"],[1,0,1,"1"]],"aug":["1","1"]})";
    EXPECT_EQ(run_cli("check additive-decomp --left " + bad.string(), cache), 5);
    fs::remove_all(cache);
}

TEST(Cli, ProductOutputComposesByFile) {
    auto dir = scratch("compose");
    const auto prod = dir / "p.json";
    ASSERT_EQ(run_cli("product --left trunc-poly:2 --right trunc-poly:2 --out " + prod.string(), dir), 0);
    auto a = algebra_from_json(Q, read_json_file(prod.string()));
    EXPECT_EQ(hh_groups(a, 2), (std::vector<std::size_t>{3, 4, 6}));
    EXPECT_EQ(run_cli("hh --no-cache --nmax 2 --algebra " + prod.string(), dir), 0);
    fs::remove_all(dir);
}
