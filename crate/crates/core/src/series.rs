//! Time grids carrying named observable channels.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::liouville::propagator::check_times;
use crate::scalar::{from_usize, Real};

/// Run parameters echoed into output files, plus any warnings raised.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Metadata {
    pub params: BTreeMap<String, String>,
    pub warnings: Vec<String>,
}

impl Metadata {
    pub fn set(&mut self, key: impl Into<String>, value: impl ToString) {
        self.params.insert(key.into(), value.to_string());
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.params.get(key).map(String::as_str)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Channel<T> {
    pub name: String,
    pub values: Vec<T>,
}

/// A strictly increasing time grid (seconds) with equal-length channels.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries<T> {
    times: Vec<T>,
    channels: Vec<Channel<T>>,
    pub metadata: Metadata,
}

impl<T: Real> TimeSeries<T> {
    pub fn new(times: Vec<T>) -> Result<Self> {
        check_times(&times)?;
        Ok(Self {
            times,
            channels: Vec::new(),
            metadata: Metadata::default(),
        })
    }

    /// Like [`TimeSeries::new`] but admits negative times; used when reading
    /// foreign files.
    pub fn with_increasing_times(times: Vec<T>) -> Result<Self> {
        for (i, w) in times.windows(2).enumerate() {
            if !(w[1] > w[0]) {
                return Err(Error::NonIncreasingTimes { index: i + 1 });
            }
        }
        Ok(Self {
            times,
            channels: Vec::new(),
            metadata: Metadata::default(),
        })
    }

    /// `steps` points evenly spaced on `[0, t_max]`, both ends included.
    pub fn uniform(t_max: T, steps: usize) -> Result<Self> {
        if steps < 2 {
            return Err(Error::invalid("steps", "need at least 2 grid points"));
        }
        if !(t_max > T::zero()) || !t_max.is_finite() {
            return Err(Error::invalid("t_max", "must be positive"));
        }
        let last = from_usize::<T>(steps - 1);
        let mut times: Vec<T> = (0..steps).map(|k| t_max * from_usize::<T>(k) / last).collect();
        times[steps - 1] = t_max;
        Self::new(times)
    }

    pub fn times(&self) -> &[T] {
        &self.times
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn channels(&self) -> &[Channel<T>] {
        &self.channels
    }

    pub fn channel(&self, name: &str) -> Option<&[T]> {
        self.channels
            .iter()
            .find(|c| c.name == name)
            .map(|c| c.values.as_slice())
    }

    /// Appends a channel; replaces an existing one of the same name.
    pub fn push_channel(&mut self, name: impl Into<String>, values: Vec<T>) -> Result<()> {
        if values.len() != self.times.len() {
            return Err(Error::DimensionMismatch {
                expected: self.times.len(),
                found: values.len(),
            });
        }
        let name = name.into();
        match self.channels.iter_mut().find(|c| c.name == name) {
            Some(c) => c.values = values,
            None => self.channels.push(Channel { name, values }),
        }
        Ok(())
    }

    /// Evaluates `f` at every grid time and stores the result as a channel.
    pub fn push_with<F>(&mut self, name: impl Into<String>, mut f: F) -> Result<()>
    where
        F: FnMut(T) -> Result<T>,
    {
        let values = self.times.iter().map(|&t| f(t)).collect::<Result<Vec<_>>>()?;
        self.push_channel(name, values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_grid_hits_both_ends() {
        let s = TimeSeries::uniform(54e-6f64, 2000).unwrap();
        assert_eq!(s.len(), 2000);
        assert_eq!(s.times()[0], 0.0);
        assert_eq!(s.times()[1999], 54e-6);
        assert!(TimeSeries::uniform(1.0f64, 1).is_err());
        assert!(TimeSeries::uniform(0.0f64, 10).is_err());
    }

    #[test]
    fn channel_lengths_must_match() {
        let mut s = TimeSeries::new(vec![0.0, 1.0, 2.0]).unwrap();
        assert!(s.push_channel("a", vec![1.0, 2.0]).is_err());
        s.push_channel("a", vec![1.0, 2.0, 3.0]).unwrap();
        s.push_channel("a", vec![0.0; 3]).unwrap();
        assert_eq!(s.channels().len(), 1);
        assert_eq!(s.channel("a").unwrap(), &[0.0; 3]);
        assert!(TimeSeries::new(vec![1.0, 0.5]).is_err());
    }
}
