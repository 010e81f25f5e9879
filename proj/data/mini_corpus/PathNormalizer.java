public class PathNormalizer {
    /** normalizes the path separators to forward slashes */
    public String normalizePathSeparators(String path) {
        return path.replace('\\', '/');
    }

    // strips the trailing separator from the path when present
    public String stripTrailingSeparator(String path) {
        if (path.endsWith("/")) {
            return path.substring(0, path.length() - 1);
        }
        return path;
    }
}
