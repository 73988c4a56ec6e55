#pragma once

// Append-only shard checkpoint file.
//
//   file   := magic record*
//   magic  := "FLTCKPT1"
//   record := u32le length, payload[length], u64le fnv1a64(payload)
//
// The payload is a JSON object: fingerprint, shard, shards, prefix_begin,
// prefix_end, cursor, tuples, and solutions as arrays of eleven decimal
// strings in the order a b c d e f alpha beta gamma p q. Each record is
// fsync'd before append() returns.

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "flt/conjecture.hpp"

namespace flt::detail {

struct CheckpointRecord {
  unsigned shard = 0;
  std::uint64_t prefix_begin = 0;
  std::uint64_t prefix_end = 0;
  std::uint64_t cursor = 0;
  std::uint64_t tuples = 0;
  std::vector<ConjectureInstance> solutions;
};

class CheckpointLog {
 public:
  // Loads an existing file or creates a new one. Throws CheckpointError for
  // unreadable or malformed files and for records of a different search.
  CheckpointLog(std::filesystem::path path, std::string fingerprint, unsigned shards);

  const std::map<unsigned, CheckpointRecord>& completed() const { return completed_; }

  // Thread-safe; throws CheckpointError when the record cannot be persisted.
  void append(const CheckpointRecord& record);

 private:
  void load();

  std::filesystem::path path_;
  std::string fingerprint_;
  unsigned shards_;
  std::map<unsigned, CheckpointRecord> completed_;
  std::mutex mu_;
};

std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace flt::detail
