#include "apptalk/framing.hpp"

namespace apptalk {

std::string frame(const std::string& payload) {
    std::string out;
    out.reserve(payload.size() + 4);
    std::uint32_t n = static_cast<std::uint32_t>(payload.size());
    out += static_cast<char>((n >> 24) & 0xff);
    out += static_cast<char>((n >> 16) & 0xff);
    out += static_cast<char>((n >> 8) & 0xff);
    out += static_cast<char>(n & 0xff);
    out += payload;
    return out;
}

std::vector<std::string> FrameDecoder::feed(const char* data, std::size_t size) {
    buffer_.append(data, size);
    std::vector<std::string> messages;
    std::size_t offset = 0;
    while (buffer_.size() - offset >= 4) {
        auto b = [&](std::size_t i) {
            return static_cast<std::uint32_t>(
                static_cast<unsigned char>(buffer_[offset + i]));
        };
        std::uint32_t len = (b(0) << 24) | (b(1) << 16) | (b(2) << 8) | b(3);
        if (len > maxFrame_)
            throw FrameError("frame of " + std::to_string(len) +
                             " bytes exceeds limit of " + std::to_string(maxFrame_));
        if (buffer_.size() - offset - 4 < len) break;
        messages.emplace_back(buffer_.substr(offset + 4, len));
        offset += 4 + len;
    }
    buffer_.erase(0, offset);
    return messages;
}

}  // namespace apptalk
