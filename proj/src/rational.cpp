#include "gw/rational.hpp"

#include "gw/errors.hpp"

namespace gw {

std::string rat_to_string(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw input_error("empty rational literal");
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
        if (!ok) throw input_error("bad rational literal: '" + s + "'");
    }
    Rat r;
    if (r.set_str(s, 10) != 0) throw input_error("bad rational literal: '" + s + "'");
    if (r.get_den() == 0) throw input_error("zero denominator in rational literal: '" + s + "'");
    r.canonicalize();
    return r;
}

} // namespace gw
