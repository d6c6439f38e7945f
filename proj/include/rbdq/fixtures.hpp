#pragma once

#include <string_view>

namespace rbdq::fixtures {

// Reference transcriptions, embedded at build time from data/.
std::string_view reference_weight0_system();
std::string_view reference_weightl_system();
std::string_view reference_weight0_reduced();
std::string_view reference_weightl_reduced();
std::string_view reference_label_map();

}  // namespace rbdq::fixtures
