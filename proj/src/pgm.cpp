#include "radmom/pgm.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <string>

#include "radmom/errors.hpp"

namespace radmom {

namespace {

struct Cursor {
    const std::string& buf;
    std::size_t pos = 0;

    bool eof() const { return pos >= buf.size(); }
    unsigned char peek() const { return static_cast<unsigned char>(buf[pos]); }

    void skip_space_and_comments() {
        for (;;) {
            while (!eof() && std::isspace(peek())) ++pos;
            if (!eof() && peek() == '#') {
                while (!eof() && peek() != '\n') ++pos;
                continue;
            }
            break;
        }
    }

    // Unsigned decimal token; `start` reports where it began.
    long long read_uint(const char* what, std::size_t& start) {
        skip_space_and_comments();
        start = pos;
        if (eof()) throw parse_error("truncated data: missing " + std::string(what), pos);
        if (!std::isdigit(peek()))
            throw parse_error("non-numeric token for " + std::string(what), pos);
        long long v = 0;
        while (!eof() && std::isdigit(peek())) {
            v = v * 10 + (peek() - '0');
            if (v > 1'000'000'000'000LL)
                throw parse_error(std::string(what) + " out of range", start);
            ++pos;
        }
        return v;
    }
};

}  // namespace

Image read_pgm(std::istream& in) {
    const std::string buf{std::istreambuf_iterator<char>(in),
                          std::istreambuf_iterator<char>()};
    if (buf.size() < 2 || buf[0] != 'P' || (buf[1] != '2' && buf[1] != '5'))
        throw parse_error("bad magic: want P2 or P5", 0);
    const bool binary = buf[1] == '5';

    Cursor c{buf, 2};
    std::size_t tok = 0;
    const long long w = c.read_uint("width", tok);
    if (w < 1) throw parse_error("width must be positive", tok);
    const long long h = c.read_uint("height", tok);
    if (h < 1) throw parse_error("height must be positive", tok);
    const long long maxval = c.read_uint("maxval", tok);
    if (maxval < 1 || maxval > 255)
        throw parse_error("unsupported maxval " + std::to_string(maxval), tok);

    const std::size_t count = static_cast<std::size_t>(w) * static_cast<std::size_t>(h);
    std::vector<std::uint8_t> px(count);

    if (binary) {
        if (c.eof() || !std::isspace(c.peek()))
            throw parse_error("missing whitespace before binary raster", c.pos);
        ++c.pos;
        if (buf.size() - c.pos < count)
            throw parse_error("truncated data: expected " +
                                  std::to_string(count) + " raster bytes",
                              buf.size());
        for (std::size_t t = 0; t < count; ++t)
            px[t] = static_cast<std::uint8_t>(buf[c.pos + t]);
    } else {
        for (std::size_t t = 0; t < count; ++t) {
            const long long v = c.read_uint("pixel", tok);
            if (v > maxval)
                throw parse_error("pixel value " + std::to_string(v) +
                                      " exceeds maxval " + std::to_string(maxval),
                                  tok);
            px[t] = static_cast<std::uint8_t>(v);
        }
    }
    return image_from_pixels(static_cast<int>(w), static_cast<int>(h),
                             std::move(px));
}

Image read_pgm(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path);
    return read_pgm(f);
}

void write_pgm(const Image& img, std::ostream& out, bool binary) {
    out << (binary ? "P5" : "P2") << '\n'
        << img.width() << ' ' << img.height() << "\n255\n";
    if (binary) {
        out.write(reinterpret_cast<const char*>(img.pixels().data()),
                  static_cast<std::streamsize>(img.pixels().size()));
    } else {
        for (int j = 0; j < img.height(); ++j) {
            for (int i = 0; i < img.width(); ++i) {
                if (i) out << ' ';
                out << static_cast<int>(img.at(i, j));
            }
            out << '\n';
        }
    }
    if (!out) throw std::runtime_error("failed to write PGM stream");
}

void write_pgm(const Image& img, const std::string& path, bool binary) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    write_pgm(img, f, binary);
}

}  // namespace radmom
