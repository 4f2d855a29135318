#include "ryd/render.hpp"

#include <sstream>

#include "ryd/error.hpp"

namespace ryd {

namespace {

char cell(bool used, bool special) {
  if (special) return used ? '*' : 'o';
  return used ? '#' : '.';
}

std::string row(int length, int used, int special_col) {
  std::string s;
  for (int i = 0; i < length; ++i) {
    if (i) s += ' ';
    s += cell(i < used, i == special_col);
  }
  return s;
}

}  // namespace

std::string render_lambda(const Family& f, const std::optional<Shape>& overlay) {
  if (overlay) {
    if (overlay->family != f) throw ConfigError("overlay shape belongs to another family");
    require_valid(*overlay);
  }
  const Shape s = overlay.value_or(Shape{f, 0, 0, false, Charge::Neutral});
  const int n = f.n;
  std::ostringstream os;
  os << to_string(f) << "  |Lambda| = " << f.lambda_size();
  if (overlay) os << "  shape " << format_shape(s);
  os << '\n';
  const std::string adjoint = std::string("adjoint ") + (s.on ? '@' : '+') + '\n';
  switch (f.kind) {
    case FamilyKind::Flag:
      os << "arm 1   " << row(n - 2, s.r1, -1) << '\n';
      os << "arm 2   " << row(n - 2, s.r2, -1) << '\n';
      os << adjoint;
      break;
    case FamilyKind::LG:
    case FamilyKind::OGodd:
      os << "row 1   " << row(2 * n - 3, s.r1, n - 2) << '\n';
      os << "row 2   " << row(2 * n - 3, s.r2, n - 2) << '\n';
      os << adjoint;
      break;
    case FamilyKind::OGeven: {
      const auto t = to_two_layer(s);
      os << "top     " << row(n - 2, t.t1, 0) << '\n';
      os << "        " << row(n - 2, t.t2, 0) << '\n';
      os << "bottom  " << row(n - 2, t.b1, n - 3) << '\n';
      os << "        " << row(n - 2, t.b2, n - 3) << '\n';
      os << adjoint;
      os << "flat    " << row(2 * n - 4, s.r1, n - 3) << '\n';
      os << "        " << row(2 * n - 4, s.r2, n - 3) << '\n';
      if (s.charge != Charge::Neutral) os << "charge  " << (s.charge == Charge::Up ? "up" : "down") << '\n';
      break;
    }
    case FamilyKind::ChainB:
    case FamilyKind::ChainC:
    case FamilyKind::G2P1:
    case FamilyKind::G2P2: {
      const int len = f.lambda_size() - 1;
      const int used = s.on ? s.r1 - 1 : s.r1;
      std::string line;
      for (int i = 0; i < len; ++i) {
        const bool short_root = (f.kind == FamilyKind::G2P1 || f.kind == FamilyKind::G2P2) && (i == 1 || i == 2);
        if (i) line += ' ';
        line += cell(i < used, short_root);
      }
      os << "chain   " << line << '\n' << adjoint;
      break;
    }
  }
  return os.str();
}

}  // namespace ryd
