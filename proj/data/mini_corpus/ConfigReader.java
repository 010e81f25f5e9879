public class ConfigReader {
    /** loads the config file from the given path */
    public Properties loadConfigFile(String path) throws IOException {
        Properties props = new Properties();
        props.load(new FileInputStream(path));
        return props;
    }

    // checks whether the config path exists on disk
    public boolean configPathExists(String path) {
        return new File(path).exists();
    }
}
