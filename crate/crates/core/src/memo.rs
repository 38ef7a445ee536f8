use std::sync::RwLock;

/// Append-only table indexed by `0..`, extended on demand.
///
/// Readers share the lock; a miss takes the write lock and extends the table
/// up to the requested index. `extend` sees all earlier entries and must not
/// touch this same table.
pub(crate) struct Memo<T> {
    rows: RwLock<Vec<T>>,
}

impl<T: Clone> Memo<T> {
    pub(crate) const fn new() -> Self {
        Memo {
            rows: RwLock::new(Vec::new()),
        }
    }

    pub(crate) fn get(&self, index: usize, extend: impl Fn(&[T]) -> T) -> T {
        if let Some(v) = self.rows.read().expect("memo lock poisoned").get(index) {
            return v.clone();
        }
        let mut rows = self.rows.write().expect("memo lock poisoned");
        while rows.len() <= index {
            let next = extend(&rows);
            rows.push(next);
        }
        rows[index].clone()
    }
}
