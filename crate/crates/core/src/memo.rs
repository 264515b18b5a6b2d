use std::collections::HashMap;
use std::hash::Hash;
use std::sync::RwLock;

/// Thread-safe memo table. Values are computed outside the lock, so two
/// racing callers may both compute a value; the first insert wins and both
/// see the same result.
pub(crate) struct Memo<K, V> {
    map: RwLock<HashMap<K, V>>,
}

impl<K: Eq + Hash + Clone, V: Clone> Memo<K, V> {
    pub(crate) fn new() -> Self {
        Memo {
            map: RwLock::new(HashMap::new()),
        }
    }

    pub(crate) fn get(&self, key: &K) -> Option<V> {
        self.map.read().unwrap().get(key).cloned()
    }

    pub(crate) fn insert(&self, key: K, value: V) -> V {
        self.map.write().unwrap().entry(key).or_insert(value).clone()
    }

    pub(crate) fn get_or_compute(&self, key: K, compute: impl FnOnce() -> V) -> V {
        if let Some(v) = self.get(&key) {
            return v;
        }
        let value = compute();
        self.insert(key, value)
    }
}

/// Declares a lazily initialized process-wide [`Memo`].
macro_rules! global_memo {
    ($name:ident : $k:ty => $v:ty) => {
        fn $name() -> &'static $crate::memo::Memo<$k, $v> {
            static CELL: std::sync::OnceLock<$crate::memo::Memo<$k, $v>> = std::sync::OnceLock::new();
            CELL.get_or_init($crate::memo::Memo::new)
        }
    };
}

pub(crate) use global_memo;
