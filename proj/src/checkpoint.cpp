#include "checkpoint.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <iterator>

#include "json.hpp"

namespace flt::detail {

namespace {

constexpr std::string_view kMagic = "FLTCKPT1";

using nlohmann::json;

[[noreturn]] void fail(const std::filesystem::path& path, const std::string& what) {
  throw CheckpointError("checkpoint " + path.string() + ": " + what);
}

template <class T>
void put_le(std::string& out, T v) {
  for (std::size_t i = 0; i < sizeof(T); ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

template <class T>
T get_le(std::string_view in) {
  T v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<T>(static_cast<unsigned char>(in[i])) << (8 * i);
  return v;
}

json instance_to_json(const ConjectureInstance& s) {
  return json::array({s.a.get_str(), s.b.get_str(), s.c.get_str(), s.d.get_str(), s.e.get_str(), s.f.get_str(),
                      s.alpha.get_str(), s.beta.get_str(), s.gamma.get_str(), s.p.get_str(), s.q.get_str()});
}

ConjectureInstance instance_from_json(const json& j) {
  if (!j.is_array() || j.size() != 11) throw std::invalid_argument("solution must have 11 values");
  std::array<Integer, 11> v;
  for (std::size_t i = 0; i < 11; ++i) {
    if (v[i].set_str(j.at(i).get<std::string>(), 10) != 0) throw std::invalid_argument("bad integer");
  }
  return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8], v[9], v[10]};
}

// Writes all of data or throws.
void write_all(int fd, const std::filesystem::path& path, std::string_view data) {
  while (!data.empty()) {
    const ssize_t n = ::write(fd, data.data(), data.size());
    if (n < 0) {
      if (errno == EINTR) continue;
      fail(path, std::string("write failed: ") + std::strerror(errno));
    }
    data.remove_prefix(static_cast<std::size_t>(n));
  }
}

void append_bytes(const std::filesystem::path& path, std::string_view data) {
  const int fd = ::open(path.c_str(), O_WRONLY | O_APPEND | O_CREAT | O_CLOEXEC, 0644);
  if (fd < 0) fail(path, std::string("cannot open for append: ") + std::strerror(errno));
  try {
    write_all(fd, path, data);
    if (::fsync(fd) != 0) fail(path, std::string("fsync failed: ") + std::strerror(errno));
  } catch (...) {
    ::close(fd);
    throw;
  }
  ::close(fd);
}

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

CheckpointLog::CheckpointLog(std::filesystem::path path, std::string fingerprint, unsigned shards)
    : path_(std::move(path)), fingerprint_(std::move(fingerprint)), shards_(shards) {
  std::error_code ec;
  if (std::filesystem::exists(path_, ec)) {
    load();
  } else {
    append_bytes(path_, kMagic);
  }
}

void CheckpointLog::load() {
  std::ifstream in(path_, std::ios::binary);
  if (!in) fail(path_, "cannot open for reading");
  const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) fail(path_, "read failed");
  std::string_view rest(bytes);
  if (!rest.starts_with(kMagic)) fail(path_, "missing FLTCKPT1 header");
  rest.remove_prefix(kMagic.size());
  std::size_t index = 0;
  while (!rest.empty()) {
    const std::string where = "record " + std::to_string(index);
    if (rest.size() < 4) fail(path_, where + ": truncated length");
    const auto len = get_le<std::uint32_t>(rest);
    rest.remove_prefix(4);
    if (rest.size() < std::size_t{len} + 8) fail(path_, where + ": truncated payload");
    const std::string_view payload = rest.substr(0, len);
    if (get_le<std::uint64_t>(rest.substr(len)) != fnv1a64(payload)) fail(path_, where + ": checksum mismatch");
    rest.remove_prefix(std::size_t{len} + 8);

    CheckpointRecord rec;
    try {
      const json j = json::parse(payload);
      if (j.at("fingerprint").get<std::string>() != fingerprint_ || j.at("shards").get<unsigned>() != shards_) {
        fail(path_, where + ": written for a different search space or shard count");
      }
      rec.shard = j.at("shard").get<unsigned>();
      rec.prefix_begin = j.at("prefix_begin").get<std::uint64_t>();
      rec.prefix_end = j.at("prefix_end").get<std::uint64_t>();
      rec.cursor = j.at("cursor").get<std::uint64_t>();
      rec.tuples = j.at("tuples").get<std::uint64_t>();
      for (const auto& s : j.at("solutions")) rec.solutions.push_back(instance_from_json(s));
    } catch (const CheckpointError&) {
      throw;
    } catch (const std::exception& e) {
      fail(path_, where + ": malformed payload (" + e.what() + ")");
    }
    if (rec.shard >= shards_ || rec.cursor != rec.prefix_end) fail(path_, where + ": inconsistent shard record");
    if (!completed_.emplace(rec.shard, std::move(rec)).second) fail(path_, where + ": duplicate shard");
    ++index;
  }
}

void CheckpointLog::append(const CheckpointRecord& record) {
  json solutions = json::array();
  for (const auto& s : record.solutions) solutions.push_back(instance_to_json(s));
  const json j = {{"fingerprint", fingerprint_}, {"shard", record.shard},          {"shards", shards_},
                  {"prefix_begin", record.prefix_begin}, {"prefix_end", record.prefix_end},
                  {"cursor", record.cursor},         {"tuples", record.tuples},       {"solutions", solutions}};
  const std::string payload = j.dump();
  std::string frame;
  put_le(frame, static_cast<std::uint32_t>(payload.size()));
  frame += payload;
  put_le(frame, fnv1a64(payload));

  std::lock_guard lock(mu_);
  append_bytes(path_, frame);
  completed_.emplace(record.shard, record);
}

}  // namespace flt::detail
