public class ModelLibrary {
    private List<String> modelList = new ArrayList<>();
    private String modelListFile;

    /** gets the model list file that holds the list of models */
    public String getModelListFile() {
        return modelListFile;
    }

    // add the model name to the model list
    public void addModelName(String model) {
        modelList.add(model);
    }
}
