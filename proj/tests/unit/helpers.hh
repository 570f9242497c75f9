#pragma once

#include <mpart/mps.hh>
#include <mpart/structure.hh>

#include <string>

namespace testing {

inline auto mps(const std::string & text) -> mpart::LStructure { return mpart::parse_mps(text); }

inline auto fixture(const std::string & name) -> mpart::LStructure
{
    return mpart::parse_mps(mpart::read_file(std::string(MPART_FIXTURE_DIR) + "/" + name));
}

inline auto k2() -> mpart::LStructure
{
    return mps("category 01\nsignature E/2\ndomain 2\ndefault E 1\nE 0 0 = 0\nE 1 1 = 0\n");
}

// One vertex whose loop carries `label` in category `cat`.
inline auto loop(const std::string & cat, char label) -> mpart::LStructure
{
    return mps("category " + cat + "\nsignature E/2\ndomain 1\ndefault E " + std::string(1, label) + "\n");
}

}
