#include "slidegrid/svg.hpp"

#include <algorithm>

namespace slidegrid {

namespace {
constexpr int S = 24;  // cell size in user units

void rect(std::string& out, int x, int y, int w, int h, const char* fill) {
    out += "<rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) + "\" width=\"" +
           std::to_string(w) + "\" height=\"" + std::to_string(h) + "\" fill=\"" + fill + "\"/>\n";
}

void line(std::string& out, int x1, int y1, int x2, int y2, const char* stroke, int width) {
    out += "<line x1=\"" + std::to_string(x1) + "\" y1=\"" + std::to_string(y1) + "\" x2=\"" +
           std::to_string(x2) + "\" y2=\"" + std::to_string(y2) + "\" stroke=\"" + stroke +
           "\" stroke-width=\"" + std::to_string(width) + "\"/>\n";
}
}  // namespace

std::string render_svg(const Board& b, const VerificationReport* report) {
    const int W = b.cols * S, H = b.rows * S;
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " +
                      std::to_string(W) + " " + std::to_string(H) + "\">\n";
    rect(out, 0, 0, W, H, "#ffffff");

    if (report) {
        auto shade = [&](const std::vector<Position>& cells, const char* fill) {
            for (Position p : cells) rect(out, (p.col - 1) * S, (p.row - 1) * S, S, S, fill);
        };
        shade(report->passed, "#dceefb");
        shade(report->stops, "#9fcdf0");
        shade(report->missing, "#f6c8c8");
    }

    for (Position p : b.obstacles.blocks) rect(out, (p.col - 1) * S, (p.row - 1) * S, S, S, "#333333");

    for (int r = 0; r <= b.rows; ++r) line(out, 0, r * S, W, r * S, "#bbbbbb", 1);
    for (int c = 0; c <= b.cols; ++c) line(out, c * S, 0, c * S, H, "#bbbbbb", 1);
    line(out, 0, 0, W, 0, "#000000", 2);
    line(out, 0, H, W, H, "#000000", 2);
    line(out, 0, 0, 0, H, "#000000", 2);
    line(out, W, 0, W, H, "#000000", 2);

    for (const Wall& w : b.obstacles.walls) {
        int x = (w.at.col - 1) * S, y = (w.at.row - 1) * S;
        if (w.side == WallSide::south)
            line(out, x, y + S, x + S, y + S, "#cc2200", 4);
        else
            line(out, x + S, y, x + S, y + S, "#cc2200", 4);
    }

    int cx = (b.start.col - 1) * S + S / 2, cy = (b.start.row - 1) * S + S / 2;
    out += "<circle cx=\"" + std::to_string(cx) + "\" cy=\"" + std::to_string(cy) + "\" r=\"" +
           std::to_string(S / 3) + "\" fill=\"#1166cc\"/>\n";
    out += "</svg>\n";
    return out;
}

}  // namespace slidegrid
