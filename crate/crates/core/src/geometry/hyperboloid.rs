//! Internal Minkowski hyperboloid model in light-cone coordinates.
//!
//! A chart point (x_bar, h) maps to the vector
//!   m_i   = x_bar_i / h          (i = 0..d-2)
//!   p_minus = 1 / h
//!   p_plus  = (|x_bar|^2 + h^2) / h
//! stored as [m_0, ..., m_{d-2}, p_minus, p_plus]. The Minkowski product is
//!   <p, q> = sum_i m_i(p) m_i(q) - (p_plus q_minus + p_minus q_plus) / 2,
//! with <p, p> = -1 on the model. Keeping 1/h as an explicit coordinate
//! makes the return trip to the chart division-only, with no cancellation.

use nalgebra::DVector;

use super::point::{Point, TangentVector};

pub(crate) fn mip(a: &DVector<f64>, b: &DVector<f64>) -> f64 {
    let n = a.len();
    let mut s = 0.0;
    for i in 0..n - 2 {
        s += a[i] * b[i];
    }
    s - 0.5 * (a[n - 1] * b[n - 2] + a[n - 2] * b[n - 1])
}

pub(crate) fn to_model(p: &Point) -> DVector<f64> {
    let d = p.dim();
    let h = p.height();
    let c = p.coords();
    let mut out = DVector::zeros(d + 1);
    let mut w = h * h;
    for i in 0..d - 1 {
        out[i] = c[i] / h;
        w += c[i] * c[i];
    }
    out[d - 1] = 1.0 / h;
    out[d] = w / h;
    out
}

pub(crate) fn to_chart(hp: &DVector<f64>) -> Point {
    let d = hp.len() - 1;
    let p_minus = hp[d - 1];
    debug_assert!(p_minus > 0.0, "model point left the upper sheet");
    let h = 1.0 / p_minus;
    let mut coords = DVector::zeros(d);
    for i in 0..d - 1 {
        coords[i] = hp[i] * h;
    }
    coords[d - 1] = h;
    Point::from_vector(coords).expect("model point maps to a valid chart point")
}

/// Differential of the chart-to-model map applied to chart components.
pub(crate) fn push_tangent(v: &TangentVector) -> DVector<f64> {
    let base = v.base();
    let d = base.dim();
    let h = base.height();
    let c = base.coords();
    let comps = v.comps();
    let vh = comps[d - 1];
    let mut out = DVector::zeros(d + 1);
    let mut xdotv = 0.0;
    let mut xsq = 0.0;
    for i in 0..d - 1 {
        out[i] = comps[i] / h - c[i] * vh / (h * h);
        xdotv += c[i] * comps[i];
        xsq += c[i] * c[i];
    }
    out[d - 1] = -vh / (h * h);
    out[d] = (2.0 * xdotv + 2.0 * h * vh) / h - (xsq + h * h) * vh / (h * h);
    out
}

/// Inverse differential: model tangent components back to chart components
/// at the given base point.
pub(crate) fn pull_tangent(base: &Point, hv: &DVector<f64>) -> DVector<f64> {
    let d = base.dim();
    let h = base.height();
    let c = base.coords();
    let vh = -h * h * hv[d - 1];
    let mut comps = DVector::zeros(d);
    for i in 0..d - 1 {
        comps[i] = h * hv[i] + c[i] * vh / h;
    }
    comps[d - 1] = vh;
    comps
}

/// Geodesic flow: exp_p(t v_hat) for a unit spacelike v_hat, evaluated with
/// the squared norm passed in by the caller.
pub(crate) fn exp_model(p: &DVector<f64>, v: &DVector<f64>) -> DVector<f64> {
    let vv = mip(v, v).max(0.0);
    let t = vv.sqrt();
    if t == 0.0 {
        return p.clone();
    }
    p * t.cosh() + v * (t.sinh() / t)
}

/// Minkowski-orthogonal projection of q onto the tangent space at p, scaled
/// to have norm rho: the logarithm map. `rho` comes from the chart distance
/// formula, which is accurate at all scales.
pub(crate) fn log_model(p: &DVector<f64>, q: &DVector<f64>, rho: f64) -> DVector<f64> {
    let w = q + p * mip(p, q);
    let nw = mip(&w, &w).max(0.0).sqrt();
    if nw == 0.0 || rho == 0.0 {
        return DVector::zeros(p.len());
    }
    w * (rho / nw)
}

/// Parallel transport of tangent v from p to q along the connecting geodesic.
pub(crate) fn transport_model(
    p: &DVector<f64>,
    q: &DVector<f64>,
    v: &DVector<f64>,
) -> DVector<f64> {
    let denom = 1.0 - mip(p, q); // = 1 + cosh(rho) >= 2
    v + (p + q) * (mip(q, v) / denom)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(coords: Vec<f64>) -> Point {
        Point::new(coords).unwrap()
    }

    #[test]
    fn model_points_have_unit_norm() {
        for p in [pt(vec![0.0, 1.0]), pt(vec![3.0, 0.2]), pt(vec![-1.0, 2.5, 0.7])] {
            let hp = to_model(&p);
            assert!((mip(&hp, &hp) + 1.0).abs() < 1e-12, "mip = {}", mip(&hp, &hp));
        }
    }

    #[test]
    fn chart_round_trip_is_exact_to_1e12() {
        for p in [
            pt(vec![0.0, 1.0]),
            pt(vec![5.0, 0.01]),
            pt(vec![-2.0, 7.0, 3.0]),
            pt(vec![0.3, -0.4, 1e-6]),
            pt(vec![100.0, 1e4]),
        ] {
            let back = to_chart(&to_model(&p));
            let err = (back.coords() - p.coords()).amax() / p.coords().amax().max(1.0);
            assert!(err < 1e-12, "round trip error {err}");
        }
    }

    #[test]
    fn pushed_tangents_are_tangent_and_isometric() {
        let p = pt(vec![1.5, -0.5, 2.0]);
        let v = TangentVector::new(p.clone(), vec![0.3, -1.0, 0.7]).unwrap();
        let hp = to_model(&p);
        let hv = push_tangent(&v);
        assert!(mip(&hp, &hv).abs() < 1e-12);
        let n2 = v.norm() * v.norm();
        assert!((mip(&hv, &hv) - n2).abs() < 1e-12 * n2.max(1.0));
        let back = pull_tangent(&p, &hv);
        assert!((back - v.comps()).amax() < 1e-12);
    }

    #[test]
    fn transport_lands_in_tangent_space() {
        let p = pt(vec![0.0, 1.0]);
        let q = pt(vec![2.0, 0.5]);
        let v = TangentVector::new(p.clone(), vec![1.0, 1.0]).unwrap();
        let (hp, hq) = (to_model(&p), to_model(&q));
        let hv = push_tangent(&v);
        let tv = transport_model(&hp, &hq, &hv);
        assert!(mip(&hq, &tv).abs() < 1e-12);
        // Isometry of the norm.
        assert!((mip(&tv, &tv) - mip(&hv, &hv)).abs() < 1e-12);
    }
}
