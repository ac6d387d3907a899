#include "gwn/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "gwn/errors.hpp"

namespace gwn {

namespace {

using nlohmann::json;

std::size_t lineOfByte(const std::string& text, std::size_t byte) {
  return 1 + static_cast<std::size_t>(
                 std::count(text.begin(), text.begin() + std::min(byte, text.size()), '\n'));
}

std::string formatDouble(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

ShapeDocument toDocument(const CurveShape& shape) {
  ShapeDocument doc;
  doc.name = shape.name;
  doc.curves.reserve(shape.curves.size());
  for (const auto& curve : shape.curves) {
    ShapeDocument::Curve c;
    for (const Point2& p : curve.controlPoints()) {
      c.points.push_back({p.x, p.y});
    }
    if (!curve.isPolynomial()) {
      c.weights = curve.weights();
    }
    doc.curves.push_back(std::move(c));
  }
  return doc;
}

CurveShape fromDocument(const ShapeDocument& doc) {
  if (doc.formatVersion != 1) {
    throw ParseError("formatVersion must be 1, got " + std::to_string(doc.formatVersion));
  }
  if (doc.curves.empty()) {
    throw ParseError("shape has no curves");
  }
  CurveShape shape;
  shape.name = doc.name;
  shape.curves.reserve(doc.curves.size());
  for (std::size_t i = 0; i < doc.curves.size(); ++i) {
    const auto& c = doc.curves[i];
    const std::string where = "curve " + std::to_string(i) + ": ";
    if (c.points.size() < 2) {
      throw ParseError(where + "needs at least two points");
    }
    std::vector<Point2> pts;
    pts.reserve(c.points.size());
    for (const auto& p : c.points) {
      if (!std::isfinite(p[0]) || !std::isfinite(p[1])) {
        throw ParseError(where + "point is not finite");
      }
      pts.push_back({p[0], p[1]});
    }
    std::vector<double> wts;
    if (c.weights) {
      if (c.weights->size() != c.points.size()) {
        throw ParseError(where + "weights length " + std::to_string(c.weights->size()) +
                         " does not match point count " + std::to_string(c.points.size()));
      }
      for (double w : *c.weights) {
        if (!(w > 0.0) || !std::isfinite(w)) {
          throw ParseError(where + "weight " + formatDouble(w) + " is not positive");
        }
      }
      wts = *c.weights;
    }
    shape.curves.emplace_back(std::move(pts), std::move(wts));
  }
  return shape;
}

CurveShape parseShape(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), lineOfByte(text, e.byte));
  }

  ShapeDocument doc;
  try {
    if (!root.is_object()) {
      throw ParseError("top level must be an object");
    }
    if (!root.contains("formatVersion") || !root["formatVersion"].is_number_integer()) {
      throw ParseError("missing integer key 'formatVersion'");
    }
    doc.formatVersion = root["formatVersion"].get<int>();
    doc.name = root.value("name", std::string{});
    if (!root.contains("curves") || !root["curves"].is_array()) {
      throw ParseError("missing array key 'curves'");
    }
    std::size_t index = 0;
    for (const auto& jc : root["curves"]) {
      const std::string where = "curve " + std::to_string(index) + ": ";
      if (!jc.is_object() || !jc.contains("points") || !jc["points"].is_array()) {
        throw ParseError(where + "expected an object with a 'points' array");
      }
      ShapeDocument::Curve c;
      for (const auto& jp : jc["points"]) {
        if (!jp.is_array() || jp.size() != 2 || !jp[0].is_number() || !jp[1].is_number()) {
          throw ParseError(where + "each point must be an [x, y] number pair");
        }
        c.points.push_back({jp[0].get<double>(), jp[1].get<double>()});
      }
      if (jc.contains("weights")) {
        if (!jc["weights"].is_array()) {
          throw ParseError(where + "'weights' must be an array");
        }
        std::vector<double> w;
        for (const auto& jw : jc["weights"]) {
          if (!jw.is_number()) {
            throw ParseError(where + "weights must be numbers");
          }
          w.push_back(jw.get<double>());
        }
        c.weights = std::move(w);
      }
      doc.curves.push_back(std::move(c));
      ++index;
    }
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
  return fromDocument(doc);
}

std::string writeShape(const CurveShape& shape) {
  const ShapeDocument doc = toDocument(shape);
  std::ostringstream out;
  out << "{\n";
  out << "  \"formatVersion\": " << doc.formatVersion << ",\n";
  out << "  \"name\": " << json(doc.name).dump() << ",\n";
  out << "  \"curves\": [\n";
  for (std::size_t i = 0; i < doc.curves.size(); ++i) {
    const auto& c = doc.curves[i];
    out << "    {\"points\": [";
    for (std::size_t j = 0; j < c.points.size(); ++j) {
      if (j > 0) {
        out << ", ";
      }
      out << '[' << formatDouble(c.points[j][0]) << ", " << formatDouble(c.points[j][1]) << ']';
    }
    out << ']';
    if (c.weights) {
      out << ", \"weights\": [";
      for (std::size_t j = 0; j < c.weights->size(); ++j) {
        if (j > 0) {
          out << ", ";
        }
        out << formatDouble((*c.weights)[j]);
      }
      out << ']';
    }
    out << '}' << (i + 1 < doc.curves.size() ? "," : "") << '\n';
  }
  out << "  ]\n";
  out << "}\n";
  return out.str();
}

namespace {

class SvgPathScanner {
public:
  explicit SvgPathScanner(const std::string& text) : text_(text) {}

  void skipSeparators() {
    while (pos_ < text_.size() &&
           (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == ',')) {
      ++pos_;
    }
  }

  bool atEnd() {
    skipSeparators();
    return pos_ >= text_.size();
  }

  std::size_t position() const { return pos_; }

  /// Next command letter, or 0 when the stream continues with a number
  /// (implicit command repetition).
  char peekCommand() {
    skipSeparators();
    if (pos_ >= text_.size()) {
      return 0;
    }
    const char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      return c;
    }
    return 0;
  }

  char takeCommand() {
    const char c = peekCommand();
    if (c != 0) {
      ++pos_;
    }
    return c;
  }

  double takeNumber() {
    skipSeparators();
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    double value = 0.0;
    const auto res = std::from_chars(begin, end, value);
    if (res.ec != std::errc{} || res.ptr == begin) {
      throw ParseError("malformed number at position " + std::to_string(pos_));
    }
    pos_ += static_cast<std::size_t>(res.ptr - begin);
    return value;
  }

private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

CurveShape parseSvgPathSubset(const std::string& pathData) {
  SvgPathScanner scan(pathData);
  CurveShape shape;
  shape.name = "svg-path";

  Point2 current{0.0, 0.0};
  Point2 subpathStart{0.0, 0.0};
  bool started = false;
  char command = 0;

  auto emitLine = [&](Point2 to) {
    if (to != current) {
      shape.curves.emplace_back(std::vector<Point2>{current, to});
    }
    current = to;
  };

  while (!scan.atEnd()) {
    const std::size_t at = scan.position();
    const char next = scan.takeCommand();
    if (next != 0) {
      command = next;
    } else if (command == 0) {
      throw ParseError("path data must start with a moveto at position " + std::to_string(at));
    } else if (command == 'M') {
      command = 'L';  // implicit lineto after an absolute moveto
    } else if (command == 'm') {
      command = 'l';
    } else if (command == 'Z' || command == 'z') {
      throw ParseError("unexpected number after closepath at position " + std::to_string(at));
    }

    const bool relative = std::islower(static_cast<unsigned char>(command));
    const Point2 base = relative && started ? current : Point2{0.0, 0.0};
    const char op = static_cast<char>(std::toupper(static_cast<unsigned char>(command)));

    if (!started && op != 'M') {
      throw ParseError("path data must start with a moveto at position " + std::to_string(at));
    }

    switch (op) {
      case 'M': {
        const double x = scan.takeNumber();
        const double y = scan.takeNumber();
        current = {base.x + x, base.y + y};
        subpathStart = current;
        started = true;
        break;
      }
      case 'L': {
        const double x = scan.takeNumber();
        const double y = scan.takeNumber();
        emitLine({base.x + x, base.y + y});
        break;
      }
      case 'H': {
        const double x = scan.takeNumber();
        emitLine({(relative ? current.x : 0.0) + x, current.y});
        break;
      }
      case 'V': {
        const double y = scan.takeNumber();
        emitLine({current.x, (relative ? current.y : 0.0) + y});
        break;
      }
      case 'Q': {
        const double x1 = scan.takeNumber();
        const double y1 = scan.takeNumber();
        const double x = scan.takeNumber();
        const double y = scan.takeNumber();
        const Point2 c1{base.x + x1, base.y + y1};
        const Point2 to{base.x + x, base.y + y};
        shape.curves.emplace_back(std::vector<Point2>{current, c1, to});
        current = to;
        break;
      }
      case 'C': {
        const double x1 = scan.takeNumber();
        const double y1 = scan.takeNumber();
        const double x2 = scan.takeNumber();
        const double y2 = scan.takeNumber();
        const double x = scan.takeNumber();
        const double y = scan.takeNumber();
        const Point2 c1{base.x + x1, base.y + y1};
        const Point2 c2{base.x + x2, base.y + y2};
        const Point2 to{base.x + x, base.y + y};
        shape.curves.emplace_back(std::vector<Point2>{current, c1, c2, to});
        current = to;
        break;
      }
      case 'Z': {
        emitLine(subpathStart);
        current = subpathStart;
        break;
      }
      default:
        throw ParseError(std::string("unsupported path command '") + command + "' at position " +
                         std::to_string(at));
    }
  }

  if (shape.curves.empty()) {
    throw ParseError("path data contains no drawable segments");
  }
  return shape;
}

std::string writeFieldPGM(const FieldGrid& field, double lo, double hi) {
  if (!(lo < hi)) {
    throw std::invalid_argument("PGM mapping requires lo < hi");
  }
  std::string out = "P5\n" + std::to_string(field.width) + " " + std::to_string(field.height) +
                    "\n255\n";
  out.reserve(out.size() + field.values.size());
  for (double v : field.values) {
    const double scaled = std::clamp((v - lo) / (hi - lo), 0.0, 1.0);
    out.push_back(static_cast<char>(static_cast<unsigned char>(std::lround(255.0 * scaled))));
  }
  return out;
}

std::string writeFieldCSV(const FieldGrid& field) {
  std::ostringstream out;
  out << "x,y,winding\n";
  for (int row = 0; row < field.height; ++row) {
    for (int col = 0; col < field.width; ++col) {
      const Point2 p = field.pixelCenter(row, col);
      out << formatDouble(p.x) << ',' << formatDouble(p.y) << ','
          << formatDouble(field.at(row, col)) << '\n';
    }
  }
  return out.str();
}

}  // namespace gwn
