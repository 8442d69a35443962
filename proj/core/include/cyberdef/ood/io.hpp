#pragma once

#include <iosfwd>
#include <string>

#include "cyberdef/ood/dataset.hpp"
#include "cyberdef/ood/model.hpp"

namespace cyberdef::ood {

// Line-oriented, newline-terminated persistence with a versioned header.
// Integers are decimal; packed observations are 13 hex digits. Loading is
// all-or-nothing: malformed, truncated, version-mismatched, or
// dictionary-colliding files raise ParseError and produce no partial object.

void save_dataset(const TransitionDataset& dataset, const std::string& path);
TransitionDataset load_dataset(const std::string& path);

void save_model(const TransitionModel& model, const std::string& path);
TransitionModel load_model(const std::string& path);

void write_dataset(const TransitionDataset& dataset, std::ostream& out);
TransitionDataset read_dataset(std::istream& in);
void write_model(const TransitionModel& model, std::ostream& out);
TransitionModel read_model(std::istream& in);

}  // namespace cyberdef::ood
