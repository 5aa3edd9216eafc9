// Contract test for the mvop command-line tool. Takes the binary path as
// argv[1], drives it through popen and checks exit codes, pinned table
// values, determinism and parse/serialize round trips.

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

using json = nlohmann::ordered_json;

int failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        std::cerr << "FAIL: " << what << "\n";
    }
}

struct CmdResult {
    int exit_code = -1;
    std::string out;
};

CmdResult run(const std::string& cmd) {
    CmdResult res;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (pipe == nullptr) return res;
    char buf[4096];
    std::size_t n = 0;
    while ((n = std::fread(buf, 1, sizeof(buf), pipe)) > 0) res.out.append(buf, n);
    const int status = pclose(pipe);
    res.exit_code = WEXITSTATUS(status);
    return res;
}

// Same serialization contract as the tool: shortest round-trip doubles,
// insertion-ordered keys, no whitespace.
std::string format_double(double x) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

void dump_json(const json& j, std::string& out) {
    switch (j.type()) {
        case json::value_t::object: {
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ',';
                first = false;
                out += '"';
                out += it.key();
                out += "\":";
                dump_json(it.value(), out);
            }
            out += '}';
            break;
        }
        case json::value_t::array: {
            out += '[';
            bool first = true;
            for (const auto& v : j) {
                if (!first) out += ',';
                first = false;
                dump_json(v, out);
            }
            out += ']';
            break;
        }
        case json::value_t::number_float:
            out += format_double(j.get<double>());
            break;
        default:
            out += j.dump();
            break;
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(item);
    return parts;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_test <path-to-mvop-binary>\n";
        return 1;
    }
    const std::string cli = argv[1];

    // --- validate: exit codes and report shape ---
    {
        const CmdResult ok = run(cli + " validate --alpha 0 --beta 0 --v 1");
        expect(ok.exit_code == 0, "validate (0,0,1) exits 0");
        const json j = json::parse(ok.out);
        expect(j.at("valid").get<bool>(), "validate (0,0,1) reports valid");
        expect(j.at("window").at("upper").get<double>() == 2.0, "window upper bound");

        const CmdResult bad = run(cli + " validate --alpha 0 --beta 0 --v 2");
        expect(bad.exit_code == 2, "validate (0,0,2) exits 2 (boundary excluded)");
        expect(json::parse(bad.out).at("failed").get<std::string>() == "upper",
               "failing side named");

        const CmdResult shifted = run(cli + " validate --alpha 0 --beta 0 --v 0.5 --v2 7");
        expect(shifted.exit_code == 0, "v2 is unconstrained");

        const CmdResult low = run(cli + " validate --alpha 1 --beta 0 --v 0.5");
        expect(low.exit_code == 2, "lower violation exits 2");
        expect(json::parse(low.out).at("failed").get<std::string>() == "lower",
               "lower side named");
    }

    // --- usage errors ---
    {
        expect(run(cli + " validate --bogus 1").exit_code == 64, "unknown flag exits 64");
        expect(run(cli + " frobnicate").exit_code == 64, "unknown subcommand exits 64");
        expect(run(cli + " emit nonsense --alpha 0 --beta 0 --v 1").exit_code == 64,
               "unknown emit table exits 64");
        expect(run(cli).exit_code == 64, "missing subcommand exits 64");
    }

    // --- emit recurrence CSV: pinned row ---
    {
        const CmdResult r =
            run(cli + " emit recurrence --alpha 0 --beta 0 --v 1 -N 1 --format csv");
        expect(r.exit_code == 0, "emit recurrence exits 0");
        const auto lines = split(r.out, '\n');
        expect(lines.size() >= 3, "header plus two rows");
        expect(lines[0] == "n,A11,A22,B11,B12,B21,B22,S11,S22,lambda,mu", "csv header");
        const auto row0 = split(lines[1], ',');
        expect(row0.size() == 11, "row width");
        expect(row0[0] == "0", "row n=0");
        expect(row0[3] == "0.5" && row0[4] == "0.3333333333333333" && row0[5] == "0.2" &&
                   row0[6] == "0.5",
               "pinned B entries of row 0");
        expect(row0[9] == "-1" && row0[10] == "0", "pinned eigenvalues of row 0");

        // CSV numbers round-trip byte-identically.
        std::string rebuilt = lines[0] + "\n";
        for (std::size_t i = 1; i < lines.size(); ++i) {
            if (lines[i].empty()) continue;
            const auto cells = split(lines[i], ',');
            rebuilt += cells[0];
            for (std::size_t c = 1; c < cells.size(); ++c) {
                double x = 0.0;
                std::from_chars(cells[c].data(), cells[c].data() + cells[c].size(), x);
                rebuilt += ',';
                rebuilt += format_double(x);
            }
            rebuilt += '\n';
        }
        expect(rebuilt == r.out, "csv parse/serialize round trip is byte-identical");
    }

    // --- emit eigenvalues: pinned ladder ---
    {
        const CmdResult r = run(cli + " emit eigenvalues --alpha 0 --beta 0 --v 1 -N 2");
        expect(r.exit_code == 0, "emit eigenvalues exits 0");
        const json j = json::parse(r.out);
        const auto& rows = j.at("rows");
        expect(rows.size() == 3, "three rows");
        const double expected[3][2] = {{-1, 0}, {-5, -4}, {-11, -10}};
        for (int n = 0; n < 3; ++n) {
            expect(rows[n].at("lambda").get<double>() == expected[n][0] &&
                       rows[n].at("mu").get<double>() == expected[n][1],
                   "eigenvalue row " + std::to_string(n));
        }
    }

    // --- emit weight at t = 1/2 ---
    {
        const CmdResult r = run(cli + " emit weight --alpha 0 --beta 0 --v 1 --at 0.5");
        expect(r.exit_code == 0, "emit weight exits 0");
        const json j = json::parse(r.out);
        const auto& val = j.at("at").at("value");
        expect(val[0].get<double>() == 0.25 && val[1].get<double>() == 0.0 &&
                   val[2].get<double>() == 0.0 && val[3].get<double>() == 0.75,
               "weight value at 1/2 is diag(0.25, 0.75)");
    }

    // --- determinism and JSON round trip ---
    {
        const std::string cmd = cli + " emit recurrence --alpha 0.5 --beta -0.25 --v 1.1 -N 8";
        const CmdResult a = run(cmd);
        const CmdResult b = run(cmd);
        expect(a.exit_code == 0 && a.out == b.out, "identical flags give identical bytes");

        std::string reserialized;
        dump_json(json::parse(a.out), reserialized);
        reserialized += '\n';
        expect(reserialized == a.out, "json parse/serialize round trip is byte-identical");
    }

    // --- verify suites ---
    {
        expect(run(cli + " verify all --alpha 0 --beta 0 --v 1 -N 12").exit_code == 0,
               "verify all on the worked example exits 0");
        expect(run(cli + " verify all --alpha 0 --beta 0 --v 2").exit_code == 2,
               "verify all on invalid parameters exits 2");
        expect(run(cli + " verify symmetry --alpha 0.5 --beta -0.25 --v 1.1").exit_code == 0,
               "verify symmetry on an asymmetric triple exits 0");
        expect(run(cli + " verify gegenbauer --p 1 --q 3").exit_code == 0,
               "verify gegenbauer (1,3) exits 0");
        const CmdResult rep = run(cli + " verify recurrence --alpha 0 --beta 0 --v 1 -N 6");
        expect(rep.exit_code == 0, "verify recurrence exits 0");
        const json j = json::parse(rep.out);
        expect(j.at("pass").get<bool>() && j.at("checks").size() >= 2, "verify report lists checks");

        expect(run("MVOP_TOLERANCE=1e-8 " + cli +
                   " verify recurrence --alpha 0 --beta 0 --v 1 -N 6")
                       .exit_code == 0,
               "MVOP_TOLERANCE is honored");
    }

    // --- pretty format smoke ---
    {
        const CmdResult r =
            run(cli + " emit norms --alpha 0 --beta 0 --v 1 -N 3 --format pretty");
        expect(r.exit_code == 0 && !r.out.empty(), "pretty format prints a table");
    }

    if (failures == 0) {
        std::cout << "cli contract: all checks passed\n";
        return 0;
    }
    std::cerr << failures << " cli contract check(s) failed\n";
    return 1;
}
