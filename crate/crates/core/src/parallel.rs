//! Data-parallel helpers. With the `parallel` feature the `Parallel` mode
//! runs on the rayon pool; without it every mode runs sequentially.

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

/// Order-preserving map.
pub fn map<T, R, F>(exec: Execution, items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            items.into_par_iter().map(f).collect()
        }
        _ => items.into_iter().map(f).collect(),
    }
}

/// `f` on every element; parallel only when the slice is long enough to pay
/// for the split.
pub fn for_each_mut<T, F>(exec: Execution, items: &mut [T], min_len: usize, f: F)
where
    T: Send,
    F: Fn(&mut T) + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel if items.len() >= min_len => {
            use rayon::prelude::*;
            items.par_iter_mut().for_each(f)
        }
        _ => {
            let _ = min_len;
            items.iter_mut().for_each(f)
        }
    }
}
