// Command-line front end: parses flags, dispatches to the library, prints
// JSON. Exit codes: 0 pass, 1 a check failed, 2 usage or unknown check,
// 3 malformed input, 4 cutoff too small, 5 algebra axioms violated.

#include "augalg/cache.hpp"
#include "augalg/checks.hpp"

#include "CLI11.hpp"

#include <atomic>
#include <chrono>
#include <iostream>
#include <thread>

using namespace augalg;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kMalformed = 3, kCutoff = 4, kAxiom = 5 };

struct Options {
    std::string algebra = "trunc-poly:2", left = "trunc-poly:2", right = "trunc-poly:2";
    std::size_t nmax = 4;
    int cutoff = -1;
    unsigned field = 0;
    bool field_given = false;
    std::string out;
    bool no_cache = false;
    std::string ring = "ext";
    unsigned jobs = 0;
    std::string check;
};

void emit(const Options& o, const Json& j) {
    const std::string text = j.dump(2);
    std::cout << text << "\n";
    if (!o.out.empty()) {
        std::ofstream f(o.out);
        if (!f) throw MalformedInput("cannot write " + o.out);
        f << text << "\n";
    }
}

/// --field when given, else the characteristic of the first file among the
/// algebra arguments, else the rationals.
unsigned choose_field(const Options& o, const std::vector<std::string>& specs) {
    if (o.field_given) {
        if (o.field != 0 && !is_prime(o.field)) throw MalformedInput("--field must be 0 or a prime");
        return o.field;
    }
    for (const auto& s : specs) {
        auto src = algebra_source(s);
        if (src.document) return field_char(*src.document);
    }
    return 0;
}

template <class F>
auto with_field(unsigned p, F&& f) {
    if (p == 0) return f(RationalField{});
    return f(PrimeField(p));
}

template <Field K>
Json algebra_key(const K& k, const std::string& spec) {
    return algebra_json(parse_algebra(k, spec));
}

int run_groups(const Options& o, const std::string& op) {
    const unsigned p = choose_field(o, {o.algebra});
    Cache cache(default_cache_dir(), !o.no_cache);
    Json out = with_field(p, [&](auto k) {
        auto a = load_algebra(k, o.algebra);
        CacheKey key{algebra_json(a), op, {{"nmax", o.nmax}}};
        auto got = cache.get_or_compute(key, [&] {
            auto ring = op == "ext" ? ext_ring(a, o.nmax) : hh_ring(a, o.nmax);
            return Json{{"dims", ring.table.dims}, {"table", table_json(ring.table)}};
        });
        Json j{{"operation", op}, {"algebra", o.algebra}, {"field", field_json(k)}, {"nmax", o.nmax}};
        j["dims"] = got.value.at("dims");
        j["table"] = got.value.at("table");
        j["cache"] = {{"key", got.key}, {"hit", got.hit}};
        return j;
    });
    emit(o, out);
    return kPass;
}

int run_construction(const Options& o, bool co) {
    const unsigned p = choose_field(o, {o.left, o.right});
    Json out = with_field(p, [&](auto k) {
        auto a = load_algebra(k, o.left), b = load_algebra(k, o.right);
        if (!co) return algebra_json(product(a, b).algebra);
        const int cutoff = o.cutoff >= 0 ? o.cutoff : int(2 * o.nmax) + 1;
        return algebra_json(coproduct(a, b, cutoff).algebra.algebra);
    });
    emit(o, out);
    return kPass;
}

CheckRequest request_of(const Options& o, bool nmax_given) {
    auto r = make_request(o.check, o.algebra);
    r.algebra = o.algebra;
    r.left = o.left;
    r.right = o.right;
    r.nmax = o.nmax;
    r.nmax_given = nmax_given;
    if (o.cutoff >= 0) r.cutoff = o.cutoff;
    r.ring = o.ring;
    return r;
}

/// One check with caching and timing; the cached value excludes timing.
Json timed_check(const CheckRequest& req, unsigned p, Cache& cache) {
    const auto t0 = std::chrono::steady_clock::now();
    Json inputs = with_field(p, [&](auto k) {
        Json j = Json::object();
        if (req.name == "axioms" || req.name == "phi-k-centre" || req.name == "chinese-remainder")
            j["algebra"] = algebra_key(k, req.algebra);
        else {
            j["left"] = algebra_key(k, req.left);
            j["right"] = algebra_key(k, req.right);
        }
        return j;
    });
    CacheKey key{inputs, "check:" + req.name, req.to_json()};
    key.params["field"] = p;
    auto got = cache.get_or_compute(key, [&] { return run_check(p, req).to_json(); });
    Json j = got.value;
    j["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    j["cache"] = {{"key", got.key}, {"hit", got.hit}};
    return j;
}

int run_single_check(const Options& o, bool nmax_given) {
    auto req = request_of(o, nmax_given);
    if (std::find(check_names().begin(), check_names().end(), req.name) == check_names().end())
        throw UnknownCheck("unknown check '" + req.name + "'");
    const bool one = req.name == "axioms" || req.name == "phi-k-centre" || req.name == "chinese-remainder";
    const unsigned p = one ? choose_field(o, {o.algebra}) : choose_field(o, {o.left, o.right});
    Cache cache(default_cache_dir(), !o.no_cache);
    Json j = timed_check(req, p, cache);
    emit(o, j);
    return j.at("pass").get<bool>() ? kPass : kFail;
}

int run_examples(const Options& o) {
    const unsigned p = choose_field(o, {});
    Json list = Json::array();
    with_field(p, [&](auto k) {
        for (const auto& name : registry_names()) {
            auto a = registry_algebra(k, name);
            list.push_back({{"name", name}, {"dim", a.dim()}, {"basis", a.labels()}, {"axioms", check_axioms(a).pass}});
        }
        return 0;
    });
    emit(o, list);
    return kPass;
}

/// Every built-in check on a pool of workers; results are placed by index
/// so the output order never depends on scheduling.
int run_report_all(const Options& o) {
    const unsigned p = choose_field(o, {});
    auto reqs = report_all_requests(o.nmax);
    std::vector<Json> results(reqs.size());
    Cache cache(default_cache_dir(), !o.no_cache);
    std::atomic<std::size_t> next{0};
    const unsigned workers = std::max(1u, o.jobs ? o.jobs : std::thread::hardware_concurrency());
    auto work = [&] {
        for (std::size_t i = next++; i < reqs.size(); i = next++) {
            try {
                results[i] = timed_check(reqs[i], p, cache);
            } catch (const std::exception& e) {
                results[i] = {{"check", reqs[i].name}, {"params", {{"request", reqs[i].to_json()}}},
                              {"pass", false}, {"error", e.what()}};
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < std::min<std::size_t>(workers, reqs.size()); ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    bool all = true;
    Json reports = Json::array();
    for (auto& r : results) {
        all = all && r.value("pass", false);
        reports.push_back(std::move(r));
    }
    emit(o, {{"pass", all}, {"count", reports.size()}, {"reports", reports}});
    return all ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cohomology of products and coproducts of augmented algebras"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* sub, bool one, bool pair) {
        if (one) sub->add_option("--algebra", o.algebra, "algebra file or registry name");
        if (pair) {
            sub->add_option("--left", o.left, "left factor");
            sub->add_option("--right", o.right, "right factor");
        }
        sub->add_option("--nmax", o.nmax, "top cohomological degree")->check(CLI::Range(0, 12));
        sub->add_option("--field", o.field, "characteristic: 0 for the rationals or a prime");
        sub->add_option("--out", o.out, "also write the JSON to this file");
        sub->add_flag("--no-cache", o.no_cache, "do not read or write the cache");
    };
    auto* ext = app.add_subcommand("ext", "Ext ring of an algebra");
    common(ext, true, false);
    auto* hh = app.add_subcommand("hh", "Hochschild cohomology ring of an algebra");
    common(hh, true, false);
    auto* prod = app.add_subcommand("product", "emit the product algebra");
    common(prod, false, true);
    auto* coprod = app.add_subcommand("coproduct", "emit the truncated coproduct algebra");
    common(coprod, false, true);
    coprod->add_option("--cutoff", o.cutoff, "truncation weight");
    auto* check = app.add_subcommand("check", "run a named check");
    common(check, true, true);
    check->add_option("name", o.check, "check name")->required();
    check->add_option("--cutoff", o.cutoff, "coproduct cutoff");
    check->add_option("--ring", o.ring, "gr-centre input: ext or algebra");
    auto* examples = app.add_subcommand("examples", "list the built-in algebras");
    examples->add_option("--field", o.field, "characteristic");
    examples->add_option("--out", o.out, "also write the JSON to this file");
    auto* all = app.add_subcommand("report-all", "run every check on the built-in examples");
    common(all, false, false);
    all->add_option("--jobs", o.jobs, "worker threads (default: hardware concurrency)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    for (auto* sub : app.get_subcommands())
        if (auto* f = sub->get_option_no_throw("--field")) o.field_given = f->count() > 0;

    try {
        if (*ext) return run_groups(o, "ext");
        if (*hh) return run_groups(o, "hh");
        if (*prod) return run_construction(o, false);
        if (*coprod) return run_construction(o, true);
        if (*check) return run_single_check(o, check->get_option("--nmax")->count() > 0);
        if (*examples) return run_examples(o);
        if (*all) return run_report_all(o);
    } catch (const UnknownCheck& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const MalformedInput& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return kMalformed;
    } catch (const CutoffTooSmall& e) {
        std::cerr << "cutoff too small: " << e.what() << "\n";
        return kCutoff;
    } catch (const AxiomError& e) {
        std::cerr << "axiom error: " << e.what() << "\n";
        return kAxiom;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kFail;
    }
    return kUsage;
}
