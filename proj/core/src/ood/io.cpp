#include "cyberdef/ood/io.hpp"

#include <fstream>
#include <sstream>

#include "cyberdef/common/errors.hpp"
#include "cyberdef/netsim/observation.hpp"

namespace cyberdef::ood {
namespace {

constexpr const char* kDatasetMagic = "cyberdef-dataset";
constexpr const char* kModelMagic = "cyberdef-model";
constexpr int kFormatVersion = 1;

std::string hex13(std::uint64_t packed) {
  char buf[14];
  std::snprintf(buf, sizeof(buf), "%013llx", static_cast<unsigned long long>(packed));
  return buf;
}

std::uint64_t parse_hex13(const std::string& s) {
  if (s.size() != 13) throw ParseError("packed state must be 13 hex digits: '" + s + "'");
  std::uint64_t bits = 0;
  for (char c : s) {
    int d;
    if (c >= '0' && c <= '9') d = c - '0';
    else if (c >= 'a' && c <= 'f') d = 10 + (c - 'a');
    else throw ParseError("bad hex digit in packed state: '" + s + "'");
    bits = (bits << 4) | static_cast<std::uint64_t>(d);
  }
  return bits;
}

std::string next_line(std::istream& in, const char* what) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(std::string("truncated file: expected ") + what);
  return line;
}

void expect_header(std::istream& in, const char* magic) {
  std::istringstream ls(next_line(in, "header"));
  std::string seen_magic;
  int version = -1;
  ls >> seen_magic >> version;
  if (seen_magic != magic) throw ParseError("unrecognized file type '" + seen_magic + "'");
  if (version != kFormatVersion) {
    throw ParseError("unsupported " + seen_magic + " version " + std::to_string(version));
  }
}

std::string expect_field(std::istream& in, const char* key) {
  std::istringstream ls(next_line(in, key));
  std::string seen_key, value;
  ls >> seen_key >> value;
  if (seen_key != key || value.empty()) {
    throw ParseError(std::string("expected '") + key + " <value>' line");
  }
  return value;
}

std::uint64_t expect_uint(std::istream& in, const char* key) {
  const std::string value = expect_field(in, key);
  try {
    return std::stoull(value);
  } catch (const std::exception&) {
    throw ParseError(std::string("field '") + key + "' is not an integer: '" + value + "'");
  }
}

StateDictionary read_dictionary(std::istream& in, std::uint64_t count) {
  StateDictionary dict;
  for (std::uint64_t i = 0; i < count; ++i) {
    std::istringstream ls(next_line(in, "state entry"));
    std::string tag, hex;
    std::uint64_t label = 0;
    ls >> tag >> label >> hex;
    if (tag != "state") throw ParseError("expected 'state <label> <hex>' line");
    if (label != i) throw ParseError("dictionary labels must be dense and ordered");
    const std::uint64_t packed = parse_hex13(hex);
    StateLabel existing;
    if (dict.lookup(packed, existing)) {
      throw ParseError("dictionary collision: state " + hex + " listed twice");
    }
    // Validate enum code points; reserved patterns are rejected here.
    sim::Observation::from_packed(packed);
    dict.intern(packed);
  }
  return dict;
}

void write_dictionary(const StateDictionary& dict, std::ostream& out) {
  const auto& packed = dict.all_packed();
  for (std::size_t i = 0; i < packed.size(); ++i) {
    out << "state " << i << ' ' << hex13(packed[i]) << '\n';
  }
}

}  // namespace

void write_dataset(const TransitionDataset& dataset, std::ostream& out) {
  out << kDatasetMagic << ' ' << kFormatVersion << '\n';
  out << "policy " << dataset.policy_tag << '\n';
  out << "episodes " << dataset.episodes << '\n';
  out << "horizon " << dataset.horizon << '\n';
  out << "states " << dataset.dictionary.size() << '\n';
  write_dictionary(dataset.dictionary, out);
  out << "records " << dataset.records.size() << '\n';
  for (const TransitionRecord& r : dataset.records) {
    out << r.episode << ',' << r.t << ',' << r.s_prev << ',' << r.action << ',' << r.s_next
        << '\n';
  }
}

TransitionDataset read_dataset(std::istream& in) {
  expect_header(in, kDatasetMagic);
  TransitionDataset ds;
  ds.policy_tag = expect_field(in, "policy");
  ds.episodes = static_cast<std::uint32_t>(expect_uint(in, "episodes"));
  ds.horizon = static_cast<std::uint32_t>(expect_uint(in, "horizon"));
  const std::uint64_t states = expect_uint(in, "states");
  ds.dictionary = read_dictionary(in, states);
  const std::uint64_t records = expect_uint(in, "records");
  ds.records.reserve(records);
  for (std::uint64_t i = 0; i < records; ++i) {
    const std::string line = next_line(in, "transition record");
    TransitionRecord r;
    char c1, c2, c3, c4;
    std::uint64_t prev = 0, next = 0, action = 0;
    std::istringstream ls(line);
    if (!(ls >> r.episode >> c1 >> r.t >> c2 >> prev >> c3 >> action >> c4 >> next) ||
        c1 != ',' || c2 != ',' || c3 != ',' || c4 != ',') {
      throw ParseError("malformed transition record '" + line + "'");
    }
    if (prev >= states || next >= states) {
      throw ParseError("transition record references unknown state label");
    }
    r.s_prev = static_cast<StateLabel>(prev);
    r.s_next = static_cast<StateLabel>(next);
    r.action = static_cast<std::uint16_t>(action);
    ds.records.push_back(r);
  }
  return ds;
}

void write_model(const TransitionModel& model, std::ostream& out) {
  out << kModelMagic << ' ' << kFormatVersion << '\n';
  out << "policy " << model.policy_tag() << '\n';
  out << "states " << model.dictionary().size() << '\n';
  out << "contexts " << model.context_count() << '\n';
  write_dictionary(model.dictionary(), out);
  for (const auto& [key, ctx] : model.contexts()) {
    const StateLabel s_prev = static_cast<StateLabel>(key >> 16);
    const std::uint16_t action = static_cast<std::uint16_t>(key & 0xffff);
    out << "context " << s_prev << ' ' << action << ' ' << ctx.total << ' '
        << ctx.outcomes.size() << '\n';
    for (const auto& [s_next, count] : ctx.outcomes) {
      out << "outcome " << s_next << ' ' << count << '\n';
    }
  }
}

TransitionModel read_model(std::istream& in) {
  expect_header(in, kModelMagic);
  const std::string policy = expect_field(in, "policy");
  const std::uint64_t states = expect_uint(in, "states");
  const std::uint64_t contexts = expect_uint(in, "contexts");
  StateDictionary dict = read_dictionary(in, states);
  std::map<std::uint64_t, TransitionModel::Context> ctx_map;
  for (std::uint64_t i = 0; i < contexts; ++i) {
    std::istringstream ls(next_line(in, "context"));
    std::string tag;
    std::uint64_t s_prev = 0, action = 0, total = 0, outcomes = 0;
    ls >> tag >> s_prev >> action >> total >> outcomes;
    if (tag != "context") throw ParseError("expected 'context' line");
    if (s_prev >= states) throw ParseError("context references unknown state label");
    TransitionModel::Context ctx;
    std::uint64_t sum = 0;
    for (std::uint64_t j = 0; j < outcomes; ++j) {
      std::istringstream os(next_line(in, "outcome"));
      std::string otag;
      std::uint64_t s_next = 0, count = 0;
      os >> otag >> s_next >> count;
      if (otag != "outcome") throw ParseError("expected 'outcome' line");
      if (s_next >= states) throw ParseError("outcome references unknown state label");
      if (count == 0) throw ParseError("outcome with zero count");
      if (!ctx.outcomes.emplace(static_cast<StateLabel>(s_next),
                                static_cast<std::uint32_t>(count)).second) {
        throw ParseError("duplicate outcome in context");
      }
      sum += count;
    }
    if (sum != total) throw ParseError("context total does not match outcome counts");
    ctx.total = total;
    const std::uint64_t key =
        TransitionModel::context_key(static_cast<StateLabel>(s_prev),
                                     static_cast<std::uint16_t>(action));
    if (!ctx_map.emplace(key, std::move(ctx)).second) {
      throw ParseError("duplicate context in model file");
    }
  }
  return TransitionModel(policy, std::move(dict), std::move(ctx_map));
}

void save_dataset(const TransitionDataset& dataset, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  write_dataset(dataset, out);
  if (!out) throw ParseError("write failure on '" + path + "'");
}

TransitionDataset load_dataset(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open dataset file '" + path + "'");
  return read_dataset(in);
}

void save_model(const TransitionModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  write_model(model, out);
  if (!out) throw ParseError("write failure on '" + path + "'");
}

TransitionModel load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open model file '" + path + "'");
  return read_model(in);
}

}  // namespace cyberdef::ood
