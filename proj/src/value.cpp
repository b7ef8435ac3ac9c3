#include "qbethe/value.hpp"

#include "qbethe/bethe.hpp"
#include "qbethe/errors.hpp"
#include "qbethe/grid.hpp"
#include "qbethe/rational.hpp"
#include "qbethe/rmatrix.hpp"
#include "qbethe/weights.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

namespace qbethe {
namespace {

// Bindings parsed so far, echoed back in insertion order.
struct Bindings {
    std::map<std::string, std::string> raw;
    std::vector<std::pair<std::string, std::string>> echo;

    const std::string& require(const std::string& name) {
        const auto it = raw.find(name);
        if (it == raw.end()) {
            throw InvalidArgError("missing parameter: " + name);
        }
        return it->second;
    }

    Rat rat(const std::string& name) {
        const Rat value = Rat::fromString(require(name));
        echo.emplace_back(name, value.toString());
        return value;
    }

    long long integer(const std::string& name) {
        const std::string& text = require(name);
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(text, &used);
        } catch (const std::exception&) {
            throw InvalidArgError("malformed integer for " + name + ": " +
                                  text);
        }
        if (used != text.size()) {
            throw InvalidArgError("malformed integer for " + name + ": " +
                                  text);
        }
        echo.emplace_back(name, std::to_string(value));
        return value;
    }

    int count(const std::string& name, int lo, int hi) {
        const long long value = integer(name);
        if (value < lo || value > hi) {
            throw InvalidArgError(name + " out of range [" +
                                  std::to_string(lo) + ", " +
                                  std::to_string(hi) + "]");
        }
        return static_cast<int>(value);
    }

    std::string word(const std::string& name) {
        const std::string text = require(name);
        echo.emplace_back(name, text);
        return text;
    }

    std::vector<Rat> list(const std::string& prefix, int n) {
        std::vector<Rat> out;
        out.reserve(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) {
            out.push_back(rat(prefix + std::to_string(i)));
        }
        return out;
    }
};

RFlavor flavorParam(Bindings& b) { return flavorFromName(b.word("flavor")); }

Rat deformationParam(Bindings& b, RFlavor flavor) {
    return b.rat(flavor == RFlavor::Rational ? "h" : "q");
}

std::vector<std::vector<Rat>> familyList(Bindings& b,
                                         const std::string& sizePrefix,
                                         const std::string& valuePrefix,
                                         int families) {
    std::vector<std::vector<Rat>> out;
    out.reserve(static_cast<std::size_t>(families));
    for (int f = 1; f <= families; ++f) {
        const int size = b.count(sizePrefix + std::to_string(f), 0, 8);
        std::vector<Rat> fam;
        fam.reserve(static_cast<std::size_t>(size));
        for (int i = 1; i <= size; ++i) {
            fam.push_back(b.rat(valuePrefix + std::to_string(f) + "_" +
                                std::to_string(i)));
        }
        out.push_back(std::move(fam));
    }
    return out;
}

Rat evaluate(const std::string& object, Bindings& b) {
    if (object == "fFunction") {
        const RFlavor fl = flavorParam(b);
        const Rat p = deformationParam(b, fl);
        return fFunction(fl, p, b.rat("u"), b.rat("v"));
    }
    if (object == "rElement") {
        const RFlavor fl = flavorParam(b);
        const Rat p = deformationParam(b, fl);
        const Rat u = b.rat("u");
        const Rat v = b.rat("v");
        const int ia = b.count("a", 1, 16);
        const int ib = b.count("b", 1, 16);
        const int ic = b.count("c", 1, 16);
        const int id = b.count("d", 1, 16);
        return rElement(fl, p, u, v, ia, ib, ic, id);
    }
    if (object == "ikDet") {
        const RFlavor fl = flavorParam(b);
        const Rat p = deformationParam(b, fl);
        const int n = b.count("n", 0, 8);
        const auto u = b.list("u", n);
        const auto v = b.list("v", n);
        return ikDeterminant(fl, p, u, v);
    }
    if (object == "ikLeft" || object == "ikRight") {
        const Rat q = b.rat("q");
        const int n = b.count("n", 0, 8);
        const auto u = b.list("u", n);
        const auto v = b.list("v", n);
        return object == "ikLeft" ? ikLeft(q, u, v) : ikRight(q, u, v);
    }
    if (object == "domainWall") {
        const RFlavor fl = flavorParam(b);
        const Rat p = deformationParam(b, fl);
        const int n = b.count("n", 0, 8);
        const auto u = b.list("u", n);
        const auto v = b.list("v", n);
        return domainWall(fl, p, u, v);
    }
    if (object == "gridH" || object == "gridK") {
        const RFlavor fl = flavorParam(b);
        const Rat p = deformationParam(b, fl);
        const int families = b.count("fam", 1, 6);
        const auto uFam = familyList(b, "a", "u", families);
        const auto vFam = familyList(
            b, "b", "v", object == "gridK" ? families + 1 : families);
        return object == "gridH" ? gridH(fl, p, uFam, vFam)
                                 : gridK(fl, p, uFam, vFam);
    }
    if (object == "weightW" || object == "psi") {
        const RFlavor fl = flavorParam(b);
        const Rat p = deformationParam(b, fl);
        const int N = b.count("N", 1, 6);
        const int L = b.count("L", 0, 8);
        const auto layers = familyList(b, "k", "t", N - 1);
        const auto v = b.list("v", L);
        ColorTuple I;
        I.reserve(static_cast<std::size_t>(L));
        for (int i = 1; i <= L; ++i) {
            I.push_back(b.count("I" + std::to_string(i), 1, N));
        }
        return object == "weightW" ? weightW(fl, p, layers, v, I)
                                   : psiLayered(fl, p, layers, v, I);
    }
    if (object == "qdet-eigenvalue") {
        const Rat q = b.rat("q");
        const int n = b.count("n", 0, 8);
        const auto w = b.list("w", n);
        const int N = b.count("N", 1, 6);
        GTPartition J(static_cast<std::size_t>(N));
        for (int m = 1; m <= n; ++m) {
            const int part = b.count("J" + std::to_string(m), 1, N);
            J[static_cast<std::size_t>(part - 1)].push_back(m);
        }
        const int j = b.count("j", 1, N);
        const Rat u = b.rat("u");
        Rat value(1);
        for (int k = 1; k <= j; ++k) {
            const Rat arg = q.pow(2 * (k - 1)) * u;
            value *= gtEigenvalue(q, w, J, j, k, arg);
        }
        return value;
    }
    throw InvalidArgError("unknown value object: " + object);
}

} // namespace

const std::vector<std::string>& valueObjects() {
    static const std::vector<std::string> names = {
        "fFunction",  "rElement", "ikDet",   "ikLeft",
        "ikRight",    "domainWall", "gridH", "gridK",
        "weightW",    "psi",      "qdet-eigenvalue",
    };
    return names;
}

std::map<std::string, std::string> parseBindings(const std::string& params) {
    std::map<std::string, std::string> out;
    std::size_t start = 0;
    while (start <= params.size()) {
        std::size_t end = params.find(';', start);
        if (end == std::string::npos) {
            end = params.size();
        }
        const std::string entry = params.substr(start, end - start);
        if (!entry.empty()) {
            const std::size_t eq = entry.find('=');
            if (eq == std::string::npos || eq == 0) {
                throw InvalidArgError("malformed binding: " + entry);
            }
            const std::string name = entry.substr(0, eq);
            if (!out.emplace(name, entry.substr(eq + 1)).second) {
                throw InvalidArgError("duplicate binding: " + name);
            }
        }
        if (end == params.size()) {
            break;
        }
        start = end + 1;
    }
    return out;
}

std::string computeValue(const std::string& object, const std::string& params,
                         const std::string& format) {
    if (format != "text" && format != "json") {
        throw InvalidArgError("unknown format: " + format);
    }
    Bindings b;
    b.raw = parseBindings(params);
    const Rat value = evaluate(object, b);
    // Reject bindings nothing consumed: they are typos, not extras.
    for (const auto& [name, text] : b.raw) {
        const bool used =
            std::any_of(b.echo.begin(), b.echo.end(),
                        [&name](const std::pair<std::string, std::string>& e) {
                            return e.first == name;
                        });
        if (!used) {
            throw InvalidArgError("unused parameter: " + name + "=" + text);
        }
    }
    if (format == "json") {
        nlohmann::ordered_json doc;
        doc["object"] = object;
        nlohmann::ordered_json ps = nlohmann::ordered_json::object();
        for (const auto& [name, text] : b.echo) {
            ps[name] = text;
        }
        doc["params"] = ps;
        doc["value"] = value.toString();
        return doc.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "object = " << object << '\n';
    for (const auto& [name, text] : b.echo) {
        out << name << " = " << text << '\n';
    }
    out << "value = " << value.toString() << '\n';
    return out.str();
}

} // namespace qbethe
