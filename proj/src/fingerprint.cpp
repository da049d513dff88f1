#include "dpc/fingerprint.hpp"

#include <fstream>
#include <sstream>

#include "dpc/errors.hpp"

namespace dpc {

std::string to_hex(std::uint64_t value) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[value & 0xf];
        value >>= 4;
    }
    return out;
}

std::string fingerprint(std::string_view bytes) {
    return to_hex(fnv1a64(bytes));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DpcError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fingerprint_file(const std::string& path) {
    return fingerprint(read_file(path));
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DpcError("cannot open file for writing: " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw DpcError("write failed: " + path);
}

}  // namespace dpc
