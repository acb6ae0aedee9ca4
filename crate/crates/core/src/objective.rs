use crate::error::ObjectiveError;

/// Closed interval `[low, high]` for one decision variable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub low: f64,
    pub high: f64,
}

impl Interval {
    pub fn new(low: f64, high: f64) -> Self {
        Interval { low, high }
    }

    /// `[-half_width, half_width]`.
    pub fn symmetric(half_width: f64) -> Self {
        Interval::new(-half_width, half_width)
    }

    pub fn is_valid(&self) -> bool {
        self.low.is_finite() && self.high.is_finite() && self.low <= self.high
    }

    pub fn width(&self) -> f64 {
        self.high - self.low
    }

    pub fn contains(&self, x: f64) -> bool {
        x >= self.low && x <= self.high
    }

    pub fn clamp(&self, x: f64) -> f64 {
        x.clamp(self.low, self.high)
    }

    /// Same interval with the endpoints swapped back into order if needed.
    pub fn ordered(self) -> Self {
        if self.low <= self.high {
            self
        } else {
            Interval::new(self.high, self.low)
        }
    }
}

/// A function to be minimized.
///
/// Implementations must be pure functions of the input vector: the engine may
/// call `evaluate` from several threads at once.
pub trait Objective: Sync {
    fn dimension(&self) -> usize;

    fn evaluate(&self, x: &[f64]) -> Result<f64, ObjectiveError>;

    /// Optional local refinement of `x` in place (Lamarckian step). Returns the
    /// refined fitness, or `None` when the objective has no refinement.
    fn refine(&self, _x: &mut [f64], _max_steps: usize) -> Option<f64> {
        None
    }
}

impl<T: Objective + ?Sized> Objective for &T {
    fn dimension(&self) -> usize {
        (**self).dimension()
    }

    fn evaluate(&self, x: &[f64]) -> Result<f64, ObjectiveError> {
        (**self).evaluate(x)
    }

    fn refine(&self, x: &mut [f64], max_steps: usize) -> Option<f64> {
        (**self).refine(x, max_steps)
    }
}

/// Wraps an infallible closure as an [`Objective`].
pub struct FnObjective<F> {
    dimension: usize,
    f: F,
}

impl<F> FnObjective<F>
where
    F: Fn(&[f64]) -> f64 + Sync,
{
    pub fn new(dimension: usize, f: F) -> Self {
        FnObjective { dimension, f }
    }
}

impl<F> Objective for FnObjective<F>
where
    F: Fn(&[f64]) -> f64 + Sync,
{
    fn dimension(&self) -> usize {
        self.dimension
    }

    fn evaluate(&self, x: &[f64]) -> Result<f64, ObjectiveError> {
        Ok((self.f)(x))
    }
}

/// Turns a maximization problem into a minimization one.
pub struct Negated<O>(pub O);

impl<O: Objective> Objective for Negated<O> {
    fn dimension(&self) -> usize {
        self.0.dimension()
    }

    fn evaluate(&self, x: &[f64]) -> Result<f64, ObjectiveError> {
        self.0.evaluate(x).map(|v| -v)
    }
}
