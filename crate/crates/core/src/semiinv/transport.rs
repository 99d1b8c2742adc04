/// Union-find whose nodes carry potentials in `Z/M`: every node knows the
/// difference `p(x) - p(root)` up to path compression. Merging with a stated
/// difference either links two trees or checks the difference around a cycle.
#[derive(Clone, Debug)]
pub struct PotentialUnionFind {
    modulus: u64,
    parent: Vec<usize>,
    size: Vec<usize>,
    // p(x) - p(parent(x))
    offset: Vec<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Conflict;

impl PotentialUnionFind {
    pub fn new(len: usize, modulus: u64) -> Self {
        assert!(modulus > 0);
        Self {
            modulus,
            parent: (0..len).collect(),
            size: vec![1; len],
            offset: vec![0; len],
        }
    }

    /// Root of `x` and `p(x) - p(root)`.
    pub fn find(&mut self, x: usize) -> (usize, u64) {
        let m = self.modulus;
        let mut path = Vec::new();
        let mut root = x;
        while self.parent[root] != root {
            path.push(root);
            root = self.parent[root];
        }
        // Walk back from the node closest to the root, accumulating offsets.
        let mut acc = 0;
        for &node in path.iter().rev() {
            acc = (acc + self.offset[node]) % m;
            self.offset[node] = acc;
            self.parent[node] = root;
        }
        (root, if x == root { 0 } else { self.offset[x] })
    }

    /// Impose `p(b) - p(a) = delta`. Returns whether two components were joined.
    pub fn merge(&mut self, a: usize, b: usize, delta: u64) -> Result<bool, Conflict> {
        let m = self.modulus;
        let delta = delta % m;
        let (ra, da) = self.find(a);
        let (rb, db) = self.find(b);
        if ra == rb {
            return if (db + m - da) % m == delta {
                Ok(false)
            } else {
                Err(Conflict)
            };
        }
        // p(rb) - p(ra) = delta - db + da
        let link = (delta + da + m - db) % m;
        if self.size[ra] >= self.size[rb] {
            self.parent[rb] = ra;
            self.offset[rb] = link;
            self.size[ra] += self.size[rb];
        } else {
            self.parent[ra] = rb;
            self.offset[ra] = (m - link) % m;
            self.size[rb] += self.size[ra];
        }
        Ok(true)
    }

    /// `p(b) - p(a)` when both lie in one component.
    pub fn difference(&mut self, a: usize, b: usize) -> Option<u64> {
        let (ra, da) = self.find(a);
        let (rb, db) = self.find(b);
        (ra == rb).then(|| (db + self.modulus - da) % self.modulus)
    }
}
