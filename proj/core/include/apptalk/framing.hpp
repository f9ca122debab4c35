#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace apptalk {

// 4-byte big-endian length prefix followed by the UTF-8 message payload.
inline constexpr std::size_t kDefaultMaxFrame = 1u << 20;

class FrameError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string frame(const std::string& payload);

// Incremental decoder for a byte stream that may deliver frames in arbitrary
// chunks. feed() buffers partial input and returns every complete message
// that became available.
class FrameDecoder {
public:
    explicit FrameDecoder(std::size_t maxFrame = kDefaultMaxFrame)
        : maxFrame_(maxFrame) {}

    std::vector<std::string> feed(const char* data, std::size_t size);
    std::vector<std::string> feed(const std::string& bytes) {
        return feed(bytes.data(), bytes.size());
    }

    // True when a frame header or body is only partially buffered.
    bool midFrame() const { return !buffer_.empty(); }

private:
    std::size_t maxFrame_;
    std::string buffer_;
};

}  // namespace apptalk
