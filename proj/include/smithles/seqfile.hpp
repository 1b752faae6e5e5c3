#pragma once

#include <string>
#include <vector>

#include "smithles/les.hpp"

namespace smithles::les {

// JSON document form of an ExactSequence window plus side constraints.
// Deterministic output (sorted keys, two-space indent); parse(print(x))
// is the identity up to whitespace.
struct SequenceDocument {
    ExactSequence sequence;
    std::vector<SideConstraint> constraints;
};

SequenceDocument parse_sequence_document(const std::string& text);
std::string print_sequence_document(const SequenceDocument& doc);

SequenceDocument load_sequence_file(const std::string& path);
void save_sequence_file(const SequenceDocument& doc, const std::string& path);

}  // namespace smithles::les
