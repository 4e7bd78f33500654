#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "heider/config.hpp"
#include "heider/graph_text.hpp"
#include "heider/heatmap.hpp"
#include "heider/results_csv.hpp"

using namespace heider;

namespace {

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

std::vector<CellEstimate> demo_cells(int n, const std::vector<double>& b1,
                                     const std::vector<double>& b2,
                                     const std::vector<double>& p) {
    std::vector<CellEstimate> cells;
    std::size_t k = 0;
    for (double x : b1)
        for (double y : b2) {
            CellEstimate c;
            c.beta1 = x;
            c.beta2 = y;
            c.n = n;
            c.trials = 100;
            c.balanced = static_cast<int>(p[k] * 100 + 0.5);
            c.jammed = c.trials - c.balanced;
            c.p_hb = p[k];
            c.std_err = binomial_std_err(p[k], c.trials);
            cells.push_back(c);
            ++k;
        }
    return cells;
}

}  // namespace

TEST_CASE("signed-graph text format") {
    SUBCASE("parses the documented example") {
        std::istringstream in("4 3\n0 1 1\n1 2 -1\n2 3 1\n");
        const SignMatrix s = read_sign_graph(in);
        CHECK(s.size() == 4);
        CHECK(s(0, 1) == 1);
        CHECK(s(1, 2) == -1);
        CHECK(s(2, 3) == 1);
        CHECK(s(0, 3) == 0);
    }
    SUBCASE("write/read round trip") {
        SignMatrix s(5);
        s.set(0, 1, 1);
        s.set(1, 4, -1);
        s.set(2, 3, -1);
        std::ostringstream out;
        write_sign_graph(out, s);
        std::istringstream in(out.str());
        CHECK(read_sign_graph(in) == s);
    }
    SUBCASE("weighted variant round-trips exactly") {
        std::mt19937_64 rng(3);
        WeightMatrix w(6);
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j)
                w.set(i, j, (static_cast<double>(rng() >> 11) * 0x1.0p-53) * 2 - 1);
        std::ostringstream out;
        write_weight_graph(out, w);
        std::istringstream in(out.str());
        CHECK(read_weight_graph(in) == w);
    }
    SUBCASE("parse errors") {
        auto reject_sign = [](const std::string& text) {
            std::istringstream in(text);
            CHECK_THROWS_AS(read_sign_graph(in), IoError);
        };
        reject_sign("");                       // no header
        reject_sign("3\n");                    // truncated header
        reject_sign("3 1\n0 0 1\n");           // self loop
        reject_sign("3 1\n0 3 1\n");           // index out of range
        reject_sign("3 1\n0 1 2\n");           // bad sign
        reject_sign("3 2\n0 1 1\n0 1 -1\n");   // duplicate edge
        reject_sign("3 1\n0 1 1\nextra\n");    // trailing garbage
        reject_sign("3 9\n");                  // m > C(n,2)

        std::istringstream big("3 1\n0 1 1.5\n");
        CHECK_THROWS_AS(read_weight_graph(big), IoError);
    }
}

TEST_CASE("results CSV") {
    SUBCASE("one cell serializes to the documented row") {
        CellEstimate c;
        c.beta1 = 0;
        c.beta2 = 0;
        c.n = 4;
        c.trials = 500;
        c.balanced = 480;
        c.jammed = 15;
        c.undecided = 5;
        c.p_hb = 0.96;
        c.std_err = 0.00876;
        std::ostringstream out;
        write_results_csv(out, {c});
        CHECK(out.str() ==
              "beta1,beta2,n,trials,balanced,jammed,undecided,p_hb,std_err\n"
              "0,0,4,500,480,15,5,0.96,0.00876\n");
    }
    SUBCASE("empty cell list gives a header-only file") {
        std::ostringstream out;
        write_results_csv(out, {});
        CHECK(out.str() == "beta1,beta2,n,trials,balanced,jammed,undecided,p_hb,std_err\n");
    }
    SUBCASE("round trip preserves values within formatting precision") {
        const auto cells =
            demo_cells(6, {0.0, 0.25}, {0.0, 0.25}, {1.0, 0.515, 0.33333333, 0.0});
        std::ostringstream out;
        write_results_csv(out, cells);
        std::istringstream in(out.str());
        const auto parsed = read_results_csv(in);
        REQUIRE(parsed.size() == cells.size());
        for (std::size_t i = 0; i < cells.size(); ++i) {
            CHECK(parsed[i].n == cells[i].n);
            CHECK(parsed[i].trials == cells[i].trials);
            CHECK(parsed[i].balanced == cells[i].balanced);
            CHECK(parsed[i].beta1 == doctest::Approx(cells[i].beta1).epsilon(1e-5));
            CHECK(parsed[i].p_hb == doctest::Approx(cells[i].p_hb).epsilon(1e-5));
            CHECK(parsed[i].std_err == doctest::Approx(cells[i].std_err).epsilon(1e-4));
        }
    }
    SUBCASE("reader rejects malformed input") {
        auto reject = [](const std::string& text) {
            std::istringstream in(text);
            CHECK_THROWS_AS(read_results_csv(in), IoError);
        };
        reject("");
        reject("wrong,header\n");
        reject("beta1,beta2,n,trials,balanced,jammed,undecided,p_hb,std_err\n1,2\n");
        // Tally violation: 1 + 0 + 0 != 2.
        reject("beta1,beta2,n,trials,balanced,jammed,undecided,p_hb,std_err\n"
               "0,0,4,2,1,0,0,0.5,0.1\nx\n");
    }
    SUBCASE("file write fails with the path in the message") {
        CHECK_THROWS_WITH_AS(write_results_csv("/nonexistent-dir/x.csv", {}),
                             doctest::Contains("/nonexistent-dir/x.csv"), IoError);
    }
}

TEST_CASE("heatmap rendering") {
    SUBCASE("pixel law") {
        CHECK(phb_to_pixel(0.0) == 0);
        CHECK(phb_to_pixel(1.0) == 255);
        CHECK(phb_to_pixel(0.5) == 128);  // 127.5 rounds half away from zero
        CHECK_THROWS_AS(phb_to_pixel(1.1), UsageError);
    }
    SUBCASE("all-white and all-black grids") {
        const auto white = render_heatmap(demo_cells(4, {0, 1}, {0, 1}, {1, 1, 1, 1}), 4);
        for (auto px : white.image.pixels) CHECK(px == 255);
        const auto black = render_heatmap(demo_cells(4, {0, 1}, {0, 1}, {0, 0, 0, 0}), 4);
        for (auto px : black.image.pixels) CHECK(px == 0);
    }
    SUBCASE("orientation: beta1 ascending columns, beta2 descending rows") {
        // p(b1, b2): p(0,0)=0.1, p(0,1)=0.2, p(1,0)=0.3, p(1,1)=0.4.
        const auto map = render_heatmap(demo_cells(4, {0, 1}, {0, 1}, {0.1, 0.2, 0.3, 0.4}), 4);
        REQUIRE(map.image.width == 2);
        REQUIRE(map.image.height == 2);
        // Top row is beta2 = 1: pixels (0.2, 0.4); bottom row beta2 = 0.
        CHECK(map.image.pixels[0] == phb_to_pixel(0.2));
        CHECK(map.image.pixels[1] == phb_to_pixel(0.4));
        CHECK(map.image.pixels[2] == phb_to_pixel(0.1));
        CHECK(map.image.pixels[3] == phb_to_pixel(0.3));
    }
    SUBCASE("incomplete grids are rejected with the missing pairs listed") {
        auto cells = demo_cells(4, {0, 1}, {0, 1}, {0.1, 0.2, 0.3, 0.4});
        cells.erase(cells.begin() + 1);  // drop (0, 1)
        CHECK_THROWS_WITH_AS(render_heatmap(cells, 4), doctest::Contains("(0, 1)"), UsageError);
        CHECK_THROWS_AS(render_heatmap(cells, 7), UsageError);  // no such size
    }
    SUBCASE("PGM write/read round trip preserves every byte") {
        const auto map =
            render_heatmap(demo_cells(9, {0, 0.5, 1}, {0, 0.5}, {0, 0.25, 0.5, 0.75, 0.9, 1}), 9);
        const std::string path = temp_path("heider_test_roundtrip.pgm");
        write_pgm(path, map);
        CHECK(read_pgm(path) == map.image);
        std::remove(path.c_str());
    }
    SUBCASE("write_heatmap_files emits raster and SVG") {
        const auto cells = demo_cells(5, {0, 1}, {0, 1}, {0.2, 0.4, 0.6, 0.8});
        const std::string stem = temp_path("heider_test_map");
        const Heatmap map = write_heatmap_files(cells, 5, stem);
        CHECK(read_pgm(stem + ".pgm") == map.image);
        std::ifstream svg(stem + ".svg");
        REQUIRE(svg.good());
        std::stringstream body;
        body << svg.rdbuf();
        CHECK(body.str().find("<svg") != std::string::npos);
        CHECK(body.str().find("beta1") != std::string::npos);
        // One rect per cell.
        std::size_t rects = 0, at = 0;
        while ((at = body.str().find("<rect", at)) != std::string::npos) {
            ++rects;
            ++at;
        }
        CHECK(rects == 4);
        std::remove((stem + ".pgm").c_str());
        std::remove((stem + ".svg").c_str());
    }
}

TEST_CASE("run configuration") {
    SUBCASE("defaults match the documented grid") {
        const RunConfig config;
        CHECK(config.beta1_values.size() == 9);
        CHECK(config.beta1_values.front() == 0.0);
        CHECK(config.beta1_values.back() == 2.0);
        CHECK(config.sizes == std::vector<int>{4, 6, 9});
        CHECK(config.trials == 200);
        CHECK(config.seed == 42);
        CHECK(config.normalize_triadic_sum == true);
        CHECK_NOTHROW(validate(config));
    }
    SUBCASE("list and range syntax") {
        CHECK(parse_real_list("0,0.5,1", "beta1") == std::vector<double>{0.0, 0.5, 1.0});
        CHECK(parse_real_list("0:0.25:2", "beta1") == RunConfig::default_beta_grid());
        CHECK(parse_int_list("4,6,9", "sizes") == std::vector<int>{4, 6, 9});
        CHECK(parse_bool("true", "x") == true);
        CHECK(parse_bool("0", "x") == false);
        CHECK(parse_u64("18446744073709551615", "seed") == 18446744073709551615ULL);
        CHECK_THROWS_AS(parse_real_list("0:0.25", "beta1"), ConfigError);
        CHECK_THROWS_AS(parse_real_list("2:0.25:0", "beta1"), ConfigError);
        CHECK_THROWS_AS(parse_real_list("a,b", "beta1"), ConfigError);
        CHECK_THROWS_AS(parse_int_list("", "sizes"), ConfigError);
        CHECK_THROWS_AS(parse_bool("maybe", "x"), ConfigError);
        CHECK_THROWS_AS(parse_u64("-3", "seed"), ConfigError);
    }
    SUBCASE("config file application and precedence") {
        RunConfig config;
        std::istringstream file(
            "# comment line\n"
            "trials = 100\n"
            "beta1 = 0,1   # trailing comment\n"
            "normalize_triadic_sum = false\n"
            "\n"
            "out = /tmp/results\n");
        apply_config_file(config, file, "test.cfg");
        CHECK(config.trials == 100);
        CHECK(config.beta1_values == std::vector<double>{0.0, 1.0});
        CHECK(config.normalize_triadic_sum == false);
        CHECK(config.out_dir == "/tmp/results");
        // A later flag wins (the CLI applies flags after the file).
        config.trials = 500;
        CHECK(config.trials == 500);
    }
    SUBCASE("unknown keys and malformed lines are rejected") {
        RunConfig config;
        std::istringstream unknown("betamax = 3\n");
        CHECK_THROWS_WITH_AS(apply_config_file(config, unknown, "f"),
                             doctest::Contains("unknown key"), ConfigError);
        std::istringstream malformed("dt 0.01\n");
        CHECK_THROWS_AS(apply_config_file(config, malformed, "f"), ConfigError);
    }
    SUBCASE("constraint violations name the key") {
        RunConfig config;
        config.dt = 0.0;
        CHECK_THROWS_WITH_AS(validate(config), doctest::Contains("dt must be > 0"), ConfigError);
        config = RunConfig{};
        config.t_max = 0.001;
        CHECK_THROWS_AS(validate(config), ConfigError);
        config = RunConfig{};
        config.sizes = {4, 4};
        CHECK_THROWS_AS(validate(config), ConfigError);
        config = RunConfig{};
        config.beta1_values = {0.0, 0.0};
        CHECK_THROWS_AS(validate(config), ConfigError);
        config = RunConfig{};
        config.stationarity_window = 0;
        CHECK_THROWS_AS(validate(config), ConfigError);
    }
    SUBCASE("config text round trip") {
        RunConfig config;
        config.trials = 77;
        config.seed = 1234567890123456789ULL;
        config.beta1_values = {0.0, 0.125, 1.0};
        config.sizes = {5};
        config.dt = 0.02;
        config.normalize_triadic_sum = false;
        config.out_dir = "out/run1";
        RunConfig reparsed;
        std::istringstream text(config_text(config));
        apply_config_file(reparsed, text, "round-trip");
        CHECK(reparsed == config);
    }
    SUBCASE("to_grid_spec carries every field") {
        RunConfig config;
        config.trials = 10;
        config.sizes = {4, 6};
        const GridSpec spec = to_grid_spec(config);
        CHECK(spec.trials_per_cell == 10);
        CHECK(spec.master_seed == config.seed);
        CHECK(spec.sizes == config.sizes);
        CHECK(spec.beta1_values == config.beta1_values);
        CHECK(spec.dynamics.normalize_triadic_sum == config.normalize_triadic_sum);
        CHECK(spec.dynamics.dt == config.dt);
        CHECK_NOTHROW(spec.validate());
    }
}
