// qbethe command line: drives the verification suites and the
// single-value evaluator through the stable C interface.
//
// Exit codes: 0 every check passed, 1 at least one check failed,
// 2 configuration or usage error.  The only environment variable
// consulted is NO_COLOR, which suppresses ANSI colors in text output.
#include "qbethe/qbethe.h"

#include "CLI11.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <unistd.h>

namespace {

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

struct Session {
    qb_session* s = nullptr;
    ~Session() { qb_session_destroy(s); }
};

// Applies one option, translating a C-interface failure into a usage
// error with the session's diagnostic.
bool applyOr(qb_session* s, qb_status status) {
    if (status == QB_OK) {
        return true;
    }
    std::cerr << "qbethe: " << qb_session_last_error(s) << '\n';
    return false;
}

bool writeOutput(const std::string& path, const char* text) {
    if (path.empty()) {
        std::cout << text;
        return true;
    }
    std::ofstream out(path, std::ios::binary);
    out << text;
    out.close();
    if (!out) {
        std::cerr << "qbethe: cannot write " << path << '\n';
        return false;
    }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of quantum-group monodromy identities"};
    app.require_subcommand(1);
    app.set_version_flag("--version", []() {
        return std::string("qbethe ") + qb_version();
    });

    // --- verify ---------------------------------------------------------
    std::string suite = "all";
    std::string flavor;
    std::string sizes;
    std::string caps;
    std::string outPath;
    std::string format = "json";
    std::uint64_t seed = 0;
    int samples = 5;
    int jobs = 1;
    int rank = 0;
    int length = -1;
    CLI::App* verify =
        app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite,
                       "suite: rmatrix, weightfn, grid, commutation, "
                       "bethe-gt, degeneration, golden, or all")
        ->capture_default_str();
    verify->add_option("--flavor", flavor,
                       "restrict to one flavor: trigA, trigB, or rational");
    verify->add_option("--N", rank, "restrict to one rank instance");
    verify->add_option("--sizes", sizes,
                       "restrict to one family-size instance, e.g. 2,1,1");
    verify->add_option("--n", length, "restrict to one quantum length");
    verify->add_option("--seed", seed, "sample-point seed")
        ->capture_default_str();
    verify->add_option("--samples", samples, "sample points per check")
        ->capture_default_str();
    verify->add_option("--caps", caps,
                       "size caps as key=value pairs: level=K, part=K");
    verify->add_option("--out", outPath, "write the report to a file");
    verify->add_option("--format", format, "output format: json or text")
        ->capture_default_str();
    verify->add_option("--jobs", jobs, "checks to run concurrently")
        ->capture_default_str();

    // --- value ----------------------------------------------------------
    std::string object;
    std::string params;
    std::string valueFormat = "text";
    CLI::App* value = app.add_subcommand(
        "value", "evaluate one named quantity at explicit parameters");
    value->add_option("object", object,
                      "one of: fFunction, rElement, ikDet, ikLeft, ikRight, "
                      "domainWall, gridH, gridK, weightW, psi, "
                      "qdet-eigenvalue")
        ->required();
    value->add_option("--params", params,
                      "semicolon-separated bindings, e.g. "
                      "\"flavor=trigA;q=2;n=1;u1=3;v1=5\"");
    value->add_option("--format", valueFormat, "output format: json or text")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    Session session;
    if (qb_session_create(&session.s) != QB_OK) {
        std::cerr << "qbethe: cannot create session\n";
        return kExitConfig;
    }

    if (verify->parsed()) {
        if (!applyOr(session.s, qb_session_set_int(session.s, "seed",
                                                   static_cast<int64_t>(
                                                       seed))) ||
            !applyOr(session.s,
                     qb_session_set_int(session.s, "samples", samples)) ||
            !applyOr(session.s, qb_session_set_int(session.s, "jobs", jobs))) {
            return kExitConfig;
        }
        if (!flavor.empty() &&
            !applyOr(session.s,
                     qb_session_set_string(session.s, "flavor",
                                           flavor.c_str()))) {
            return kExitConfig;
        }
        if (rank != 0 &&
            !applyOr(session.s, qb_session_set_int(session.s, "N", rank))) {
            return kExitConfig;
        }
        if (length >= 0 &&
            !applyOr(session.s, qb_session_set_int(session.s, "n", length))) {
            return kExitConfig;
        }
        if (!sizes.empty() &&
            !applyOr(session.s, qb_session_set_string(session.s, "sizes",
                                                      sizes.c_str()))) {
            return kExitConfig;
        }
        if (!caps.empty() &&
            !applyOr(session.s,
                     qb_session_set_string(session.s, "caps", caps.c_str()))) {
            return kExitConfig;
        }
        if (format != "json" && format != "text") {
            std::cerr << "qbethe: unknown format: " << format << '\n';
            return kExitConfig;
        }

        qb_report* report = nullptr;
        if (qb_run_suite(session.s, suite.c_str(), &report) != QB_OK) {
            std::cerr << "qbethe: " << qb_session_last_error(session.s)
                      << '\n';
            return kExitConfig;
        }

        std::string renderAs = format;
        const bool color = format == "text" && outPath.empty() &&
                           isatty(STDOUT_FILENO) != 0 &&
                           std::getenv("NO_COLOR") == nullptr;
        if (color) {
            renderAs = "text-color";
        }
        char* text = nullptr;
        const qb_status rendered =
            qb_report_render(report, renderAs.c_str(), &text);
        const int passed = qb_report_all_passed(report);
        qb_report_destroy(report);
        if (rendered != QB_OK) {
            std::cerr << "qbethe: cannot render report\n";
            return kExitConfig;
        }
        const bool written = writeOutput(outPath, text);
        qb_string_free(text);
        if (!written) {
            return kExitConfig;
        }
        return passed == 1 ? 0 : kExitFail;
    }

    // value subcommand
    if (!applyOr(session.s, qb_session_set_string(session.s, "format",
                                                  valueFormat.c_str()))) {
        return kExitConfig;
    }
    char* text = nullptr;
    if (qb_compute_value(session.s, object.c_str(), params.c_str(), &text) !=
        QB_OK) {
        std::cerr << "qbethe: " << qb_session_last_error(session.s) << '\n';
        return kExitConfig;
    }
    std::cout << text;
    qb_string_free(text);
    return 0;
}
