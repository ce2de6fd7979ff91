#pragma once

#include "hop/format.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace hop_test {

inline std::string fixture_path(const std::string & name)
{
    return std::string(HOP_FIXTURE_DIR) + "/" + name;
}

inline std::string starter_path(int n)
{
    return fixture_path("starters_n" + std::to_string(n) + ".txt");
}

inline std::vector<hop::StarterRecord> load_starters(int n)
{
    return hop::parse_starter_file(hop::read_file(starter_path(n)));
}

inline const hop::StarterRecord & find_record(const std::vector<hop::StarterRecord> & rs, std::vector<int> type)
{
    for (const auto & r : rs)
        if (r.cycle_type == type)
            return r;
    throw std::runtime_error("no record of type " + hop::format_type(type));
}

} // namespace hop_test
