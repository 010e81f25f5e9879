public class CacheStore {
    private Map<String, String> cacheEntries = new HashMap<>();

    // clear the cache entries from the store
    public void clearCacheEntries() {
        cacheEntries.clear();
    }

    // count of cache entries currently stored
    public int countCacheEntries() {
        return cacheEntries.size();
    }
}
