#ifndef DPC_FINGERPRINT_HPP
#define DPC_FINGERPRINT_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace dpc {

// FNV-1a 64-bit. Used for content fingerprints in run manifests; not a
// cryptographic hash.
inline std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string to_hex(std::uint64_t value);

// Fingerprint of a string payload, formatted as 16 hex chars.
std::string fingerprint(std::string_view bytes);

// Reads the whole file and fingerprints it. Throws DpcError if unreadable.
std::string fingerprint_file(const std::string& path);

// Reads a whole file into a string. Throws DpcError if unreadable.
std::string read_file(const std::string& path);

// Writes a string to a file, replacing it. Throws DpcError on failure.
void write_file(const std::string& path, std::string_view content);

}  // namespace dpc

#endif  // DPC_FINGERPRINT_HPP
