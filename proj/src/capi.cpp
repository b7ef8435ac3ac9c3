#include "qbethe/qbethe.h"

#include "qbethe/errors.hpp"
#include "qbethe/report.hpp"
#include "qbethe/value.hpp"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

using qbethe::DomainError;
using qbethe::InvalidArgError;
using qbethe::SuiteConfig;
using qbethe::VerificationReport;

struct qb_session {
    SuiteConfig config;
    std::string format = "json";
    std::string lastError;
};

struct qb_report {
    std::vector<VerificationReport> reports;
};

namespace {

qb_status fail(qb_session* session, qb_status code, const std::string& what) {
    if (session != nullptr) {
        session->lastError = what;
    }
    return code;
}

// Runs `body` with the standard exception-to-status mapping.
template <class Fn>
qb_status guarded(qb_session* session, Fn&& body) {
    if (session == nullptr) {
        return QB_ERR_INVALID_ARG;
    }
    try {
        body();
    } catch (const InvalidArgError& e) {
        return fail(session, QB_ERR_INVALID_ARG, e.what());
    } catch (const DomainError& e) {
        return fail(session, QB_ERR_DOMAIN, e.what());
    } catch (const std::bad_alloc&) {
        return fail(session, QB_ERR_NOMEM, "allocation failure");
    } catch (const std::exception& e) {
        return fail(session, QB_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(session, QB_ERR_INTERNAL, "unknown failure");
    }
    session->lastError.clear();
    return QB_OK;
}

char* copyOut(const std::string& text) {
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

// "key=value,key=value" capability caps: per-level universal-vector
// size and largest index part.
void applyCaps(SuiteConfig& config, const std::string& text) {
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string::npos) {
            end = text.size();
        }
        const std::string entry = text.substr(start, end - start);
        if (!entry.empty()) {
            const std::size_t eq = entry.find('=');
            if (eq == std::string::npos || eq == 0 ||
                eq + 1 == entry.size()) {
                throw InvalidArgError("malformed cap entry: " + entry);
            }
            const std::string key = entry.substr(0, eq);
            const std::string value = entry.substr(eq + 1);
            std::size_t used = 0;
            int parsed = 0;
            try {
                parsed = std::stoi(value, &used);
            } catch (const std::exception&) {
                throw InvalidArgError("malformed cap value: " + entry);
            }
            if (used != value.size() || parsed < 0 || parsed > 3) {
                throw InvalidArgError("cap out of range [0, 3]: " + entry);
            }
            if (key == "level") {
                config.levelCap = parsed;
            } else if (key == "part") {
                config.partCap = parsed;
            } else {
                throw InvalidArgError("unknown cap: " + key);
            }
        }
        if (end == text.size()) {
            break;
        }
        start = end + 1;
    }
}

std::vector<int> parseSizes(const std::string& text) {
    std::vector<int> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string::npos) {
            end = text.size();
        }
        const std::string entry = text.substr(start, end - start);
        if (!entry.empty()) {
            std::size_t used = 0;
            int parsed = 0;
            try {
                parsed = std::stoi(entry, &used);
            } catch (const std::exception&) {
                throw InvalidArgError("malformed size: " + entry);
            }
            if (used != entry.size() || parsed < 0 || parsed > 16) {
                throw InvalidArgError("size out of range [0, 16]: " + entry);
            }
            out.push_back(parsed);
        }
        if (end == text.size()) {
            break;
        }
        start = end + 1;
    }
    return out;
}

} // namespace

extern "C" {

const char* qb_version(void) { return "1.0.0"; }

qb_status qb_session_create(qb_session** out_session) {
    if (out_session == nullptr) {
        return QB_ERR_INVALID_ARG;
    }
    *out_session = new (std::nothrow) qb_session();
    return *out_session != nullptr ? QB_OK : QB_ERR_NOMEM;
}

void qb_session_destroy(qb_session* session) { delete session; }

const char* qb_session_last_error(const qb_session* session) {
    return session != nullptr ? session->lastError.c_str() : "";
}

qb_status qb_session_set_int(qb_session* session, const char* key,
                             int64_t value) {
    return guarded(session, [&]() {
        if (key == nullptr) {
            throw InvalidArgError("null option key");
        }
        const std::string name(key);
        if (name == "seed") {
            session->config.seed = static_cast<std::uint64_t>(value);
        } else if (name == "samples") {
            if (value < 1 || value > 10000) {
                throw InvalidArgError("samples out of range [1, 10000]");
            }
            session->config.samples = static_cast<int>(value);
        } else if (name == "jobs") {
            if (value < 1 || value > 256) {
                throw InvalidArgError("jobs out of range [1, 256]");
            }
            session->config.jobs = static_cast<int>(value);
        } else if (name == "N") {
            if (value < 1 || value > 16) {
                throw InvalidArgError("N out of range [1, 16]");
            }
            session->config.rankFilter = static_cast<int>(value);
        } else if (name == "n") {
            if (value < 0 || value > 16) {
                throw InvalidArgError("n out of range [0, 16]");
            }
            session->config.lengthFilter = static_cast<int>(value);
        } else {
            throw InvalidArgError("unknown integer option: " + name);
        }
    });
}

qb_status qb_session_set_string(qb_session* session, const char* key,
                                const char* value) {
    return guarded(session, [&]() {
        if (key == nullptr || value == nullptr) {
            throw InvalidArgError("null option key or value");
        }
        const std::string name(key);
        const std::string text(value);
        if (name == "flavor") {
            if (text == "all") {
                session->config.flavorFilter.reset();
            } else {
                session->config.flavorFilter = qbethe::flavorFromName(text);
            }
        } else if (name == "sizes") {
            if (text.empty()) {
                session->config.sizesFilter.reset();
            } else {
                session->config.sizesFilter = parseSizes(text);
            }
        } else if (name == "caps") {
            applyCaps(session->config, text);
        } else if (name == "format") {
            if (text != "json" && text != "text") {
                throw InvalidArgError("unknown format: " + text);
            }
            session->format = text;
        } else {
            throw InvalidArgError("unknown string option: " + name);
        }
    });
}

qb_status qb_run_suite(qb_session* session, const char* suite,
                       qb_report** out_report) {
    return guarded(session, [&]() {
        if (suite == nullptr || out_report == nullptr) {
            throw InvalidArgError("null suite name or output pointer");
        }
        auto report = std::make_unique<qb_report>();
        report->reports = qbethe::runSuite(suite, session->config);
        *out_report = report.release();
    });
}

int qb_report_all_passed(const qb_report* report) {
    return report != nullptr && qbethe::allPassed(report->reports) ? 1 : 0;
}

qb_status qb_report_render(const qb_report* report, const char* format,
                           char** out_text) {
    if (report == nullptr || format == nullptr || out_text == nullptr) {
        return QB_ERR_INVALID_ARG;
    }
    try {
        const std::string name(format);
        std::string text;
        if (name == "json") {
            text = qbethe::reportsToJson(report->reports);
        } else if (name == "text") {
            text = qbethe::reportsToText(report->reports, false);
        } else if (name == "text-color") {
            text = qbethe::reportsToText(report->reports, true);
        } else {
            return QB_ERR_INVALID_ARG;
        }
        *out_text = copyOut(text);
    } catch (const std::bad_alloc&) {
        return QB_ERR_NOMEM;
    } catch (const std::exception&) {
        return QB_ERR_INTERNAL;
    }
    return QB_OK;
}

void qb_report_destroy(qb_report* report) { delete report; }

qb_status qb_compute_value(qb_session* session, const char* object,
                           const char* params, char** out_text) {
    return guarded(session, [&]() {
        if (object == nullptr || params == nullptr || out_text == nullptr) {
            throw InvalidArgError("null object, params, or output pointer");
        }
        *out_text =
            copyOut(qbethe::computeValue(object, params, session->format));
    });
}

void qb_string_free(char* text) { std::free(text); }

} /* extern "C" */
