#include "polyroots/format.hpp"

#include <cmath>
#include <cstdio>

namespace polyroots {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_complex(Complex z) {
    std::string s = format_double(z.real() + 0.0);
    const double im = z.imag() + 0.0;
    s += (std::signbit(im) ? "-" : "+");
    s += format_double(std::fabs(im));
    s += "i";
    return s;
}

std::string format_residual(double r) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.2e", r);
    return buf;
}

namespace {

void write(const nlohmann::json& j, std::string& out) {
    switch (j.type()) {
        case nlohmann::json::value_t::object: {
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ',';
                first = false;
                out += nlohmann::json(it.key()).dump();
                out += ':';
                write(it.value(), out);
            }
            out += '}';
            break;
        }
        case nlohmann::json::value_t::array: {
            out += '[';
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out += ',';
                write(j[i], out);
            }
            out += ']';
            break;
        }
        case nlohmann::json::value_t::number_float: {
            double v = j.get<double>();
            if (v == 0.0) v = 0.0;  // "-0" would re-parse as the integer 0
            if (!std::isfinite(v)) {
                out += "null";
            } else {
                char buf[40];
                std::snprintf(buf, sizeof buf, "%.17g", v);
                out += buf;
            }
            break;
        }
        default: out += j.dump(); break;
    }
}

}  // namespace

std::string canonical_json(const nlohmann::json& j) {
    std::string out;
    write(j, out);
    return out;
}

nlohmann::json report_to_json(const RootReport& report, const std::string& status) {
    nlohmann::json roots = nlohmann::json::array();
    for (const RootEntry& e : report.roots) {
        roots.push_back({{"re", e.root.real()}, {"im", e.root.imag()}, {"residual", e.residual}, {"branch", e.branch}});
    }
    return {{"method", report.method}, {"roots", roots}, {"warnings", report.warnings}, {"status", status}};
}

}  // namespace polyroots
