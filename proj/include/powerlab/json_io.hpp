// include/powerlab/json_io.hpp
//
// JSON renderings of the reports. Keys are emitted in a fixed order.
#ifndef POWERLAB_JSON_IO_HPP
#define POWERLAB_JSON_IO_HPP

#include "json.hpp"
#include "powerlab/repetitions.hpp"
#include "powerlab/sturmian.hpp"
#include "powerlab/threeiet.hpp"

namespace powerlab {

using Json = nlohmann::ordered_json;

/// {prefix_length, index_num, index_den, witness{start,period,length},
///  max_integer_power{j,witness}} plus per_factor when present.
Json to_json(const IndexReport& report);
Json to_json(const IndexFormulaReport& report);
Json to_json(const BlockParse& parse);
Json to_json(const AbmpReport& report);
Json to_json(const BoundReport& report);

/// Rational rendering `num/den` and its 15-significant-digit decimal.
std::string ratio_text(const Ratio& r);
std::string ratio_decimal(const Ratio& r);

}  // namespace powerlab

#endif  // POWERLAB_JSON_IO_HPP
