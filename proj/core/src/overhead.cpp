#include "gibbsnet/overhead.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gibbsnet/delaunay.hpp"

namespace gibbsnet {

double OverheadParams::margin() const {
    if (interior_margin >= 0.0) return interior_margin;
    return lambda_macro > 0.0 ? 2.0 / std::sqrt(lambda_macro) : 0.0;
}

OverheadReport macro_overhead(const OverheadParams& params) {
    if (params.lambda_macro <= 0.0)
        throw std::invalid_argument("macro intensity must be positive");
    if (params.lambda_user < 0.0 || params.beacon_rate <= 0.0)
        throw std::invalid_argument("invalid overhead parameters");

    const double ratio = params.lambda_user / params.lambda_macro;
    const double tau = params.beacon_rate;

    OverheadReport rep;
    rep.users_per_cell = ratio;
    rep.users_per_cell_second_moment = ratio + 1.280 * ratio * ratio;
    rep.uplink_mean = kDelaunayMeanNeighbors * tau * ratio;
    rep.uplink_bound =
        tau * std::sqrt(rep.users_per_cell_second_moment * kDelaunayNeighborSecondMoment);
    rep.backhaul_mean = 2.0 * rep.uplink_mean;
    return rep;
}

OverheadReport hetero_overhead(const OverheadParams& params) {
    OverheadReport rep = macro_overhead(params);
    if (params.lambda_small < 0.0 || params.small_radius < 0.0)
        throw std::invalid_argument("invalid small-cell parameters");

    const double tau = params.beacon_rate;
    const double disc = std::numbers::pi * params.small_radius * params.small_radius;
    const double small_per_macro = params.lambda_small / params.lambda_macro;

    rep.hetero = true;
    rep.boolean_coverage = params.lambda_small * disc;
    rep.sparsity_warning = rep.boolean_coverage > kBooleanSparsityThreshold;
    rep.mean_users_small = params.lambda_user * disc;
    rep.mean_users_macro =
        params.lambda_user / params.lambda_macro - small_per_macro * rep.mean_users_small;
    if (rep.mean_users_macro < 0.0)
        throw std::invalid_argument(
            "mean macro population is negative: parameters violate the sparse Boolean regime");

    rep.small_neighbors_of_macro = 7.0 * small_per_macro;
    rep.small_neighbors_of_small = 7.0 * small_per_macro;
    rep.uplink_macro = 6.0 * tau * rep.mean_users_macro +
                       7.0 * tau * small_per_macro * rep.mean_users_small;
    rep.uplink_small = 7.0 * tau * rep.mean_users_macro +
                       7.0 * tau * small_per_macro * rep.mean_users_small;
    rep.backhaul_macro_macro = 2.0 * rep.uplink_macro;
    rep.backhaul_macro_small = rep.uplink_macro + rep.uplink_small;
    return rep;
}

std::vector<Vec2> sample_ppp(double intensity, double window_w, double window_h,
                             std::mt19937_64& rng) {
    if (intensity < 0.0 || window_w <= 0.0 || window_h <= 0.0)
        throw std::invalid_argument("invalid point process parameters");
    if (intensity == 0.0) return {};
    std::poisson_distribution<int> count_draw(intensity * window_w * window_h);
    const int count = count_draw(rng);
    std::uniform_real_distribution<double> ux(0.0, window_w);
    std::uniform_real_distribution<double> uy(0.0, window_h);
    std::vector<Vec2> points(count);
    for (Vec2& p : points) p = {ux(rng), uy(rng)};
    return points;
}

namespace {

// Uniform grid for nearest-macro lookup.
class NearestGrid {
public:
    NearestGrid(const std::vector<Vec2>& pts, double w, double h, double cell)
        : pts_(pts), cell_(cell) {
        nx_ = std::max(1, static_cast<int>(w / cell_));
        ny_ = std::max(1, static_cast<int>(h / cell_));
        buckets_.resize(static_cast<std::size_t>(nx_) * ny_);
        for (int i = 0; i < static_cast<int>(pts.size()); ++i)
            buckets_[bucket(pts[i])].push_back(i);
    }

    int nearest(const Vec2& p) const {
        const int bx = clamp_x(static_cast<int>(p.x / cell_));
        const int by = clamp_y(static_cast<int>(p.y / cell_));
        int best = -1;
        double best_d2 = 0.0;
        for (int ring = 0; ring < std::max(nx_, ny_); ++ring) {
            for (int ix = bx - ring; ix <= bx + ring; ++ix) {
                if (ix < 0 || ix >= nx_) continue;
                for (int iy = by - ring; iy <= by + ring; ++iy) {
                    if (iy < 0 || iy >= ny_) continue;
                    if (std::max(std::abs(ix - bx), std::abs(iy - by)) != ring) continue;
                    for (int i : buckets_[static_cast<std::size_t>(iy) * nx_ + ix]) {
                        const double d2 = distance_sq(p, pts_[i]);
                        if (best < 0 || d2 < best_d2) {
                            best = i;
                            best_d2 = d2;
                        }
                    }
                }
            }
            // Cells on ring r+1 are at least r*cell away; safe to stop.
            if (best >= 0 && best_d2 <= static_cast<double>(ring) * cell_ *
                                            static_cast<double>(ring) * cell_)
                break;
        }
        return best;
    }

private:
    int bucket(const Vec2& p) const {
        return clamp_y(static_cast<int>(p.y / cell_)) * nx_ +
               clamp_x(static_cast<int>(p.x / cell_));
    }
    int clamp_x(int i) const { return std::clamp(i, 0, nx_ - 1); }
    int clamp_y(int i) const { return std::clamp(i, 0, ny_ - 1); }

    const std::vector<Vec2>& pts_;
    double cell_;
    int nx_ = 1, ny_ = 1;
    std::vector<std::vector<int>> buckets_;
};

}  // namespace

EmpiricalOverhead monte_carlo_overhead(const OverheadParams& params, int replications,
                                       std::mt19937_64& rng) {
    if (replications < 1) throw std::invalid_argument("at least one replication is required");
    if (params.lambda_macro <= 0.0)
        throw std::invalid_argument("macro intensity must be positive");
    const double margin = params.margin();
    const double tau = params.beacon_rate;
    const OverheadReport analytic = macro_overhead(params);

    EmpiricalOverhead emp;
    emp.replications = static_cast<std::size_t>(replications);
    double sum_n = 0.0, sum_n2 = 0.0, sum_m = 0.0, sum_m2 = 0.0, sum_mn = 0.0;
    double sum_edge = 0.0;
    std::size_t under_bound = 0;

    for (int r = 0; r < replications; ++r) {
        const std::vector<Vec2> macros =
            sample_ppp(params.lambda_macro, params.window_w, params.window_h, rng);
        const std::vector<Vec2> users =
            sample_ppp(params.lambda_user, params.window_w, params.window_h, rng);
        if (macros.size() < 3) continue;

        const Triangulation tri = delaunay(macros);
        NearestGrid grid(macros, params.window_w, params.window_h,
                         1.0 / std::sqrt(params.lambda_macro));

        std::vector<int> load(macros.size(), 0);
        for (const Vec2& u : users) {
            const int b = grid.nearest(u);
            if (b >= 0) ++load[b];
        }

        std::vector<char> interior(macros.size(), 0);
        for (std::size_t i = 0; i < macros.size(); ++i)
            interior[i] = macros[i].x >= margin && macros[i].x <= params.window_w - margin &&
                          macros[i].y >= margin && macros[i].y <= params.window_h - margin;

        double rep_mn = 0.0;
        std::size_t rep_cells = 0;
        for (std::size_t i = 0; i < macros.size(); ++i) {
            if (!interior[i]) continue;
            const double ni = static_cast<double>(tri.neighbors[i].size());
            const double mi = static_cast<double>(load[i]);
            sum_n += ni;
            sum_n2 += ni * ni;
            sum_m += mi;
            sum_m2 += mi * mi;
            sum_mn += mi * ni;
            rep_mn += mi * ni;
            ++rep_cells;
            ++emp.interior_nuclei;
        }
        for (const auto& [a, b] : tri.edges()) {
            if (!interior[a] || !interior[b]) continue;
            sum_edge += tau * (static_cast<double>(load[a]) * tri.neighbors[a].size() +
                               static_cast<double>(load[b]) * tri.neighbors[b].size());
            ++emp.interior_edges;
        }
        if (rep_cells > 0) {
            const double rep_uplink = tau * rep_mn / static_cast<double>(rep_cells);
            emp.per_replication_uplink.push_back(rep_uplink);
            if (rep_uplink <= analytic.uplink_bound) ++under_bound;
        }
    }

    if (emp.interior_nuclei == 0)
        throw std::runtime_error(
            "no interior nuclei: enlarge the window or reduce the interior margin");

    const double n_cells = static_cast<double>(emp.interior_nuclei);
    emp.mean_degree = sum_n / n_cells;
    emp.degree_second_moment = sum_n2 / n_cells;
    const double var_n = emp.degree_second_moment - emp.mean_degree * emp.mean_degree;
    emp.degree_cv = emp.mean_degree > 0.0 ? std::sqrt(std::max(var_n, 0.0)) / emp.mean_degree : 0.0;
    emp.mean_users = sum_m / n_cells;
    emp.users_second_moment = sum_m2 / n_cells;
    emp.uplink_mean = tau * sum_mn / n_cells;
    emp.backhaul_mean =
        emp.interior_edges > 0 ? sum_edge / static_cast<double>(emp.interior_edges) : 0.0;
    emp.bound_exceed_fraction =
        emp.per_replication_uplink.empty()
            ? 0.0
            : static_cast<double>(under_bound) /
                  static_cast<double>(emp.per_replication_uplink.size());
    return emp;
}

}  // namespace gibbsnet
