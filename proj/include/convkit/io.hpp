#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "convkit/convspace.hpp"
#include "convkit/net.hpp"
#include "convkit/seqterm.hpp"

namespace convkit {

struct ParseError : std::runtime_error {
    std::string field;
    ParseError(const std::string& fld, const std::string& what)
        : std::runtime_error(fld.empty() ? what : fld + ": " + what), field(fld) {}
};

// .convspace.json: {"points": [labels...], "V": {label: [labels...]}}
std::string emit_space(const ConvSpace& s, const std::vector<std::string>& labels = {});
ConvSpace parse_space(const std::string& text, std::vector<std::string>* labels = nullptr);

// .net.json: {"carrier_size": n, "index_le": [[bool...]], "values": [ints]}
std::string emit_net(const Net& n);
Net parse_net(const std::string& text);

// .term.json: recursive {"kind": ..., ...} documents; rationals as "p/q".
std::string emit_term(const TermPtr& t);
TermPtr parse_term(const std::string& text);

}  // namespace convkit
