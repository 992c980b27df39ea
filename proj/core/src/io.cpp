#include "opack/io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace opack {

namespace {

// Whitespace-tolerant integer scanner that tracks line/column for errors.
class Scanner {
 public:
  explicit Scanner(const std::string& text) : text_(text) {}

  std::int64_t next_int(const char* what) {
    skip_space();
    if (pos_ >= text_.size())
      throw ParseError(line_, col_, std::string("expected ") + what + ", got end of input");
    int start_line = line_, start_col = col_;
    bool neg = false;
    if (text_[pos_] == '-') { neg = true; advance(); }
    if (pos_ >= text_.size() || !std::isdigit((unsigned char)text_[pos_]))
      throw ParseError(start_line, start_col, std::string("expected ") + what);
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) {
      v = v * 10 + (text_[pos_] - '0');
      if (v < 0) throw ParseError(start_line, start_col, "integer overflow");
      advance();
    }
    return neg ? -v : v;
  }

  // Number of integers left on the current line.
  int ints_on_line() {
    size_t save_pos = pos_;
    int save_line = line_, save_col = col_;
    int count = 0;
    while (true) {
      while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r'))
        advance();
      if (pos_ >= text_.size() || text_[pos_] == '\n') break;
      if (text_[pos_] == '-' || std::isdigit((unsigned char)text_[pos_])) {
        ++count;
        if (text_[pos_] == '-') advance();
        while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) advance();
      } else {
        break;
      }
    }
    pos_ = save_pos; line_ = save_line; col_ = save_col;
    return count;
  }

  void expect_end(const char* what) {
    skip_space();
    if (pos_ < text_.size())
      throw ParseError(line_, col_, std::string("unexpected trailing input after ") + what);
  }

  int line() const { return line_; }
  int column() const { return col_; }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_])) advance();
  }
  void advance() {
    if (text_[pos_] == '\n') { ++line_; col_ = 1; } else { ++col_; }
    ++pos_;
  }

  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

Instance make_checked(int d, std::vector<Extent> container, std::vector<BoxType> types,
                      const Scanner& sc) {
  try {
    return Instance(d, std::move(container), std::move(types));
  } catch (const std::invalid_argument& e) {
    throw ParseError(sc.line(), sc.column(), e.what());
  }
}

}  // namespace

Instance parse_instance(const std::string& text) {
  Scanner sc(text);
  std::int64_t d = sc.next_int("dimension");
  if (d < 2 || d > 16) throw ParseError(sc.line(), sc.column(), "dimension out of range");
  std::vector<Extent> container;
  for (int i = 0; i < d; ++i) container.push_back(sc.next_int("container extent"));
  std::int64_t m = sc.next_int("type count");
  if (m < 1) throw ParseError(sc.line(), sc.column(), "type count must be positive");
  std::vector<BoxType> types;
  for (int t = 0; t < m; ++t) {
    BoxType bt;
    for (int i = 0; i < d; ++i) bt.sizes.push_back(sc.next_int("box size"));
    bt.value = sc.next_int("box value");
    std::int64_t count = sc.next_int("box count");
    if (count < 1 || count > 1'000'000)
      throw ParseError(sc.line(), sc.column(), "box count out of range");
    bt.count = (int)count;
    types.push_back(std::move(bt));
  }
  sc.expect_end("instance");
  return make_checked((int)d, std::move(container), std::move(types), sc);
}

std::string serialize_instance(const Instance& instance) {
  std::ostringstream out;
  out << instance.dim() << "\n";
  for (int i = 0; i < instance.dim(); ++i)
    out << (i ? " " : "") << instance.container(i);
  out << "\n" << instance.num_types() << "\n";
  for (const BoxType& t : instance.types()) {
    for (int i = 0; i < instance.dim(); ++i) out << t.sizes[i] << " ";
    out << t.value << " " << t.count << "\n";
  }
  return out.str();
}

Instance import_orlib(const std::string& text, OrlibFormat format) {
  Scanner sc(text);
  std::int64_t m = sc.next_int("piece type count");
  if (m < 1 || m > 10'000) throw ParseError(sc.line(), sc.column(), "piece count out of range");
  Extent L = sc.next_int("container length");
  Extent W = sc.next_int("container width");
  std::vector<BoxType> types;
  for (int t = 0; t < m; ++t) {
    BoxType bt;
    bt.sizes = {sc.next_int("piece length"), sc.next_int("piece width")};
    if (format == OrlibFormat::Gcut) {
      bt.count = 1;
      bt.value = sc.next_int("piece value");
    } else {
      // Some published copies carry an extra leading minimum-count column;
      // accept both "l w q v" and "l w p q v" with p = 0.
      int fields = sc.ints_on_line();
      if (fields == 3) {
        std::int64_t p = sc.next_int("piece minimum count");
        if (p != 0)
          throw ParseError(sc.line(), sc.column(), "nonzero piece minimum count unsupported");
        fields = 2;
      }
      if (fields != 2)
        throw ParseError(sc.line(), sc.column(), "expected piece count and value");
      std::int64_t q = sc.next_int("piece count");
      if (q < 1 || q > 1'000'000) throw ParseError(sc.line(), sc.column(), "piece count out of range");
      bt.count = (int)q;
      bt.value = sc.next_int("piece value");
    }
    // Initial reduction: drop pieces that cannot fit at all.
    if (bt.sizes[0] <= L && bt.sizes[1] <= W) types.push_back(std::move(bt));
  }
  sc.expect_end("instance");
  if (types.empty()) throw ParseError(sc.line(), sc.column(), "no piece fits the container");
  return make_checked(2, {L, W}, std::move(types), sc);
}

}  // namespace opack
