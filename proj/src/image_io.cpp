#include "scenebias/image_io.hpp"

#include <png.h>

#include <cctype>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <string>

#include "scenebias/errors.hpp"

namespace scenebias {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

// Reads one PGM header token, skipping whitespace and '#' comments.
std::string pgm_token(std::istream& in) {
  std::string tok;
  int ch;
  while ((ch = in.get()) != EOF) {
    if (ch == '#') {
      while ((ch = in.get()) != EOF && ch != '\n') {
      }
      continue;
    }
    if (!std::isspace(ch)) {
      tok.push_back(static_cast<char>(ch));
      break;
    }
  }
  while ((ch = in.get()) != EOF && !std::isspace(ch) && ch != '#') {
    tok.push_back(static_cast<char>(ch));
  }
  if (ch == '#') in.unget();
  return tok;
}

GrayImage load_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());

  const std::string magic = pgm_token(in);
  if (magic != "P5") throw FormatError(path.string() + ": unsupported PGM magic '" + magic + "'");

  auto parse_int = [&](const char* what) {
    const std::string tok = pgm_token(in);
    std::size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != tok.size() || tok.empty())
      throw FormatError(path.string() + ": bad PGM " + std::string(what));
    return v;
  };

  const long w = parse_int("width");
  const long h = parse_int("height");
  const long maxval = parse_int("maxval");
  if (w < 1 || h < 1) throw FormatError(path.string() + ": bad PGM dimensions");
  if (maxval != 255) throw FormatError(path.string() + ": only maxval 255 PGM is supported");

  GrayImage img(static_cast<int>(w), static_cast<int>(h));
  in.read(reinterpret_cast<char*>(img.data.data()),
          static_cast<std::streamsize>(img.pixel_count()));
  if (in.gcount() != static_cast<std::streamsize>(img.pixel_count()))
    throw FormatError(path.string() + ": truncated PGM pixel data");
  return img;
}

void save_pgm(const GrayImage& img, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << "P5\n" << img.width << " " << img.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.data.data()),
            static_cast<std::streamsize>(img.pixel_count()));
  if (!out) throw IoError("write failed for " + path.string());
}

GrayImage load_png(const std::filesystem::path& path) {
  FilePtr fp(std::fopen(path.string().c_str(), "rb"));
  if (!fp) throw IoError("cannot open " + path.string());

  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw Error("libpng: failed to create read struct");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw Error("libpng: failed to create info struct");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw FormatError(path.string() + ": PNG decode failed");
  }

  png_init_io(png, fp.get());
  // Normalize everything to 8-bit gray/RGB(A) rows.
  png_read_png(png, info,
               PNG_TRANSFORM_STRIP_16 | PNG_TRANSFORM_PACKING | PNG_TRANSFORM_EXPAND, nullptr);

  const png_uint_32 w = png_get_image_width(png, info);
  const png_uint_32 h = png_get_image_height(png, info);
  const png_byte channels = png_get_channels(png, info);
  png_bytepp rows = png_get_rows(png, info);

  GrayImage img(static_cast<int>(w), static_cast<int>(h));
  for (png_uint_32 y = 0; y < h; ++y) {
    const png_bytep row = rows[y];
    for (png_uint_32 x = 0; x < w; ++x) {
      std::uint8_t v = 0;
      switch (channels) {
        case 1: v = row[x]; break;
        case 2: v = row[x * 2]; break;  // gray + alpha
        case 3: v = luminance(row[x * 3], row[x * 3 + 1], row[x * 3 + 2]); break;
        case 4: v = luminance(row[x * 4], row[x * 4 + 1], row[x * 4 + 2]); break;
        default:
          png_destroy_read_struct(&png, &info, nullptr);
          throw FormatError(path.string() + ": unsupported PNG channel count");
      }
      img.at(static_cast<int>(x), static_cast<int>(y)) = v;
    }
  }
  png_destroy_read_struct(&png, &info, nullptr);
  return img;
}

void save_png(const GrayImage& img, const std::filesystem::path& path) {
  FilePtr fp(std::fopen(path.string().c_str(), "wb"));
  if (!fp) throw IoError("cannot write " + path.string());

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw Error("libpng: failed to create write struct");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw Error("libpng: failed to create info struct");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw IoError("PNG encode failed for " + path.string());
  }

  png_init_io(png, fp.get());
  png_set_IHDR(png, info, static_cast<png_uint_32>(img.width),
               static_cast<png_uint_32>(img.height), 8, PNG_COLOR_TYPE_GRAY,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  std::vector<png_bytep> rows(img.height);
  for (int y = 0; y < img.height; ++y)
    rows[y] = const_cast<png_bytep>(img.data.data() + static_cast<std::size_t>(y) * img.width);
  png_set_rows(png, info, rows.data());
  png_write_png(png, info, PNG_TRANSFORM_IDENTITY, nullptr);
  png_destroy_write_struct(&png, &info);
}

bool has_png_signature(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  unsigned char sig[8] = {0};
  in.read(reinterpret_cast<char*>(sig), 8);
  return in.gcount() == 8 && png_sig_cmp(sig, 0, 8) == 0;
}

}  // namespace

GrayImage load_image(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) throw IoError("no such file: " + path.string());
  if (has_png_signature(path)) return load_png(path);

  std::ifstream probe(path, std::ios::binary);
  char magic[2] = {0, 0};
  probe.read(magic, 2);
  if (probe.gcount() == 2 && magic[0] == 'P' && magic[1] == '5') return load_pgm(path);
  throw FormatError(path.string() + ": not a PGM (P5) or PNG file");
}

void save_image(const GrayImage& img, const std::filesystem::path& path) {
  if (img.width < 1 || img.height < 1) throw ArgumentError("cannot save an empty image");
  std::string ext = path.extension().string();
  for (auto& ch : ext) ch = static_cast<char>(std::tolower(ch));
  if (ext == ".pgm") {
    save_pgm(img, path);
  } else if (ext == ".png") {
    save_png(img, path);
  } else {
    throw ArgumentError("unsupported image extension '" + ext + "' for " + path.string());
  }
}

}  // namespace scenebias
