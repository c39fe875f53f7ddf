#pragma once

#include <stdexcept>
#include <string>

namespace charvar {

enum class Group { sl, gl, sp, o, so_odd, so_even };

inline std::string group_name(Group g) {
    switch (g) {
        case Group::sl: return "sl";
        case Group::gl: return "gl";
        case Group::sp: return "sp";
        case Group::o: return "o";
        case Group::so_odd: return "so_odd";
        case Group::so_even: return "so_even";
    }
    throw std::logic_error("bad group");
}

inline Group parse_group(const std::string& s) {
    if (s == "sl") return Group::sl;
    if (s == "gl") return Group::gl;
    if (s == "sp") return Group::sp;
    if (s == "o") return Group::o;
    if (s == "so_odd") return Group::so_odd;
    if (s == "so_even") return Group::so_even;
    throw std::invalid_argument("unknown group: " + s);
}

} // namespace charvar
