// Maintenance tool: harvests enumeration sweeps, classifies polygons by
// Jones certificate, and hunts for conformations matching a named target.
// Used to produce and regenerate the catalog coordinate data.

#include <chrono>
#include <cstdio>
#include <map>
#include <string>

#include "latticeknots/json_io.hpp"
#include "latticeknots/search.hpp"
#include "support/pd_builders.hpp"
#include "support/pretzel.hpp"

using namespace latknot;
using namespace latknot::testref;

static LaurentPoly target_by_name(const std::string& name) {
    if (name == "unknot") return LaurentPoly::one();
    if (name == "3_1") return torus_jones_oracle(2, 3);
    if (name == "4_1") return jones_of(braid_closure(3, {1, -2, 1, -2}));
    if (name == "5_1") return torus_jones_oracle(2, 5);
    if (name == "5_2") return jones_of(braid_closure(3, {1, 1, 1, 2, -1, 2}));
    if (name == "8_19") return torus_jones_oracle(3, 4);
    if (name == "8_20") return jones_of(braid_closure(3, {1, 1, 1, -2, -1, -1, -1, -2}));
    if (name == "9_46") return jones_of(pretzel_link({3, 3, -3}));
    throw std::invalid_argument("unknown target: " + name);
}

int main(int argc, char** argv) {
    std::string mode = argc > 1 ? argv[1] : "sweep";
    std::map<std::string, std::string> opt;
    for (int i = 2; i + 1 < argc; i += 2) opt[argv[i]] = argv[i + 1];

    int total = opt.count("--total") ? std::stoi(opt["--total"]) : 10;
    int workers = opt.count("--workers") ? std::stoi(opt["--workers"]) : 1;

    EnumerationSpec spec;
    spec.total = total;
    spec.workers = workers;
    if (opt.count("--split")) {
        std::array<int, 3> sp{};
        if (std::sscanf(opt["--split"].c_str(), "%d,%d,%d", &sp[0], &sp[1], &sp[2]) != 3) {
            std::fprintf(stderr, "bad --split\n");
            return 2;
        }
        spec.split = sp;
    }
    if (opt.count("--alternating")) spec.alternating = opt["--alternating"] == "1";

    auto t0 = std::chrono::steady_clock::now();

    if (mode == "count") {
        std::uint64_t n = enumerate_polygons(spec, [](const Conformation&) { return true; });
        auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::printf("total=%d unique=%llu time=%lldms\n", total,
                    static_cast<unsigned long long>(n), static_cast<long long>(dt));
        return 0;
    }

    if (mode == "sweep") {
        // classify by Jones (mirror classes merged)
        struct Class {
            std::uint64_t count = 0;
            Conformation first;
        };
        std::map<std::string, Class> classes;
        std::uint64_t n = enumerate_polygons(spec, [&](const Conformation& c) {
            LaurentPoly v = jones_certificate(c);
            LaurentPoly m = v.inverted_variable();
            std::string key = std::min(v.str("q"), m.str("q"));
            auto& cl = classes[key];
            if (cl.count == 0) cl.first = c;
            cl.count++;
            return true;
        });
        auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::printf("total=%d unique=%llu classes=%zu time=%lldms\n", total,
                    static_cast<unsigned long long>(n), classes.size(),
                    static_cast<long long>(dt));
        for (auto& [key, cl] : classes) {
            std::printf("  class[%s] count=%llu\n    witness %s\n", key.c_str(),
                        static_cast<unsigned long long>(cl.count), to_json(cl.first).c_str());
        }
        return 0;
    }

    if (mode == "taut") {
        // direct DFS with alternating directions, no public budget cap;
        // classifies everything by Jones certificate
        std::array<int, 3> sp = spec.split ? *spec.split
                                           : std::array<int, 3>{total / 3, total / 3, total / 3};
        struct Class {
            std::uint64_t count = 0;
            Conformation first;
        };
        std::map<std::string, Class> classes;
        std::set<std::vector<Coord>> seen;
        std::uint64_t emitted = 0;
        detail::PolygonDfs dfs;
        dfs.split = sp;
        dfs.total = sp[0] + sp[1] + sp[2];
        dfs.alternating = true;
        dfs.sink = [&](Conformation&& c) {
            auto key = detail::polygon_canonical_key(c);
            if (!seen.insert(std::move(key)).second) return true;
            ++emitted;
            LaurentPoly v = jones_certificate(c);
            LaurentPoly m = v.inverted_variable();
            std::string cls = std::min(v.str("q"), m.str("q"));
            auto& cl = classes[cls];
            if (cl.count == 0) cl.first = c;
            cl.count++;
            return true;
        };
        dfs.run();
        auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::printf("taut split=(%d,%d,%d) unique=%llu classes=%zu time=%lldms nodes=%llu\n",
                    sp[0], sp[1], sp[2], static_cast<unsigned long long>(emitted), classes.size(),
                    static_cast<long long>(dt), static_cast<unsigned long long>(dfs.nodes));
        for (auto& [key, cl] : classes) {
            std::printf("  class[%s] count=%llu\n    witness %s\n", key.c_str(),
                        static_cast<unsigned long long>(cl.count), to_json(cl.first).c_str());
        }
        return 0;
    }

    if (mode == "tautfind") {
        // directed taut search with no public budget cap, stopping at the
        // first conformation whose Jones certificate matches the target
        LaurentPoly targetv = target_by_name(opt.count("--target") ? opt["--target"] : "8_20");
        std::array<int, 3> sp = spec.split ? *spec.split
                                           : std::array<int, 3>{total / 3, total / 3, total / 3};
        std::atomic<bool> stop{false};
        std::mutex mu;
        int nworkers = std::max(1, workers);
        std::vector<std::thread> pool;
        for (int w = 0; w < nworkers; ++w)
            pool.emplace_back([&, w]() {
                detail::PolygonDfs dfs;
                dfs.split = sp;
                dfs.total = sp[0] + sp[1] + sp[2];
                dfs.alternating = true;
                dfs.worker_count = nworkers;
                dfs.worker_id = w;
                dfs.sink = [&](Conformation&& c) {
                    if (stop.load()) return false;
                    if (jones_equal_up_to_mirror(jones_certificate(c), targetv)) {
                        std::lock_guard<std::mutex> lock(mu);
                        if (!stop.exchange(true))
                            std::printf("FOUND %s\n", to_json(c).c_str());
                        return false;
                    }
                    return true;
                };
                dfs.run();
            });
        for (auto& th : pool) th.join();
        auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::printf("tautfind done stop=%d time=%lldms\n", stop.load() ? 1 : 0,
                    static_cast<long long>(dt));
        return stop.load() ? 0 : 1;
    }

    if (mode == "find") {
        LaurentPoly target = target_by_name(opt.count("--target") ? opt["--target"] : "3_1");
        bool found = false;
        enumerate_polygons(spec, [&](const Conformation& c) {
            if (jones_equal_up_to_mirror(jones_certificate(c), target)) {
                std::printf("FOUND %s\n", to_json(c).c_str());
                found = true;
                return false;
            }
            return true;
        });
        auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::printf("found=%d time=%lldms\n", found ? 1 : 0, static_cast<long long>(dt));
        return found ? 0 : 1;
    }

    std::fprintf(stderr, "modes: count | sweep | find\n");
    return 2;
}
