#include "robincap/json_out.hpp"

#include <cmath>
#include <cstdio>

namespace robincap {

namespace {

// nlohmann prints the shortest round-trip form; reports want 17 significant digits
void dump17(const Json& j, std::string& out) {
    switch (j.type()) {
        case Json::value_t::object: {
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ',';
                first = false;
                out += Json(it.key()).dump();
                out += ':';
                dump17(it.value(), out);
            }
            out += '}';
            break;
        }
        case Json::value_t::array: {
            out += '[';
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out += ',';
                dump17(j[i], out);
            }
            out += ']';
            break;
        }
        case Json::value_t::number_float: {
            const double v = j.get<double>();
            if (!std::isfinite(v)) {
                out += "null";
            } else {
                char buf[40];
                std::snprintf(buf, sizeof buf, "%.17g", v);
                out += buf;
            }
            break;
        }
        default: out += j.dump();
    }
}

}  // namespace

std::string json17(const Json& j) {
    std::string out;
    dump17(j, out);
    return out;
}

}  // namespace robincap
